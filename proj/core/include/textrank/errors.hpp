#pragma once

#include <stdexcept>
#include <string>

namespace textrank {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a document is empty (or whitespace-only) where content is required.
class EmptyDocumentError : public Error {
public:
    using Error::Error;
};

/// Raised when corpus statistics are unavailable or internally inconsistent.
class StatsError : public Error {
public:
    using Error::Error;
};

/// Raised when a ROUGE score is undefined (e.g. every reference was skipped).
class ScoreUndefinedError : public Error {
public:
    using Error::Error;
};

/// Raised on unreadable or unwritable files and directories.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace textrank
