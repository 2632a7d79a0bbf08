#include "textrank/porter_stemmer.hpp"

#include <cstring>

namespace textrank {
namespace {

// Imperative port of the classic algorithm. `word` is the working buffer,
// `end` the index of the last live character, `stem_end` the last character
// of the stem a candidate suffix was split from.
struct Stemmer {
    std::string word;
    int end = 0;
    int stem_end = 0;

    bool is_consonant(int i) const {
        switch (word[static_cast<std::size_t>(i)]) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_consonant(i - 1);
        default:
            return true;
        }
    }

    // Number of VC sequences in word[0..stem_end], the m of [C](VC)^m[V].
    int measure() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > stem_end)
                return n;
            if (!is_consonant(i))
                break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > stem_end)
                    return n;
                if (is_consonant(i))
                    break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > stem_end)
                    return n;
                if (!is_consonant(i))
                    break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= stem_end; ++i)
            if (!is_consonant(i))
                return true;
        return false;
    }

    bool double_consonant(int i) const {
        if (i < 1)
            return false;
        if (word[static_cast<std::size_t>(i)] != word[static_cast<std::size_t>(i - 1)])
            return false;
        return is_consonant(i);
    }

    // consonant-vowel-consonant ending at i, last consonant not w, x or y
    bool cvc(int i) const {
        if (i < 2 || !is_consonant(i) || is_consonant(i - 1) || !is_consonant(i - 2))
            return false;
        const char ch = word[static_cast<std::size_t>(i)];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(const char* s) {
        const int len = static_cast<int>(std::strlen(s));
        if (len > end + 1)
            return false;
        if (word.compare(static_cast<std::size_t>(end - len + 1),
                         static_cast<std::size_t>(len), s) != 0)
            return false;
        stem_end = end - len;
        return true;
    }

    void set_suffix(const char* s) {
        const int len = static_cast<int>(std::strlen(s));
        word.replace(static_cast<std::size_t>(stem_end + 1), word.size(), s);
        end = stem_end + len;
    }

    void replace_if_measure(const char* s) {
        if (measure() > 0)
            set_suffix(s);
    }

    // plurals and -ed / -ing
    void step1ab() {
        if (word[static_cast<std::size_t>(end)] == 's') {
            if (ends("sses"))
                end -= 2;
            else if (ends("ies"))
                set_suffix("i");
            else if (word[static_cast<std::size_t>(end - 1)] != 's')
                --end;
        }
        if (ends("eed")) {
            if (measure() > 0)
                --end;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            end = stem_end;
            if (ends("at"))
                set_suffix("ate");
            else if (ends("bl"))
                set_suffix("ble");
            else if (ends("iz"))
                set_suffix("ize");
            else if (double_consonant(end)) {
                --end;
                const char ch = word[static_cast<std::size_t>(end)];
                if (ch == 'l' || ch == 's' || ch == 'z')
                    ++end;
            } else if (measure() == 1 && cvc(end)) {
                set_suffix("e");
            }
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem())
            word[static_cast<std::size_t>(end)] = 'i';
    }

    // double suffixes -> single ones, keyed on the penultimate letter
    void step2() {
        if (end < 1)
            return;
        switch (word[static_cast<std::size_t>(end - 1)]) {
        case 'a':
            if (ends("ational")) { replace_if_measure("ate"); break; }
            if (ends("tional")) { replace_if_measure("tion"); break; }
            break;
        case 'c':
            if (ends("enci")) { replace_if_measure("ence"); break; }
            if (ends("anci")) { replace_if_measure("ance"); break; }
            break;
        case 'e':
            if (ends("izer")) { replace_if_measure("ize"); break; }
            break;
        case 'l':
            if (ends("bli")) { replace_if_measure("ble"); break; }
            if (ends("alli")) { replace_if_measure("al"); break; }
            if (ends("entli")) { replace_if_measure("ent"); break; }
            if (ends("eli")) { replace_if_measure("e"); break; }
            if (ends("ousli")) { replace_if_measure("ous"); break; }
            break;
        case 'o':
            if (ends("ization")) { replace_if_measure("ize"); break; }
            if (ends("ation")) { replace_if_measure("ate"); break; }
            if (ends("ator")) { replace_if_measure("ate"); break; }
            break;
        case 's':
            if (ends("alism")) { replace_if_measure("al"); break; }
            if (ends("iveness")) { replace_if_measure("ive"); break; }
            if (ends("fulness")) { replace_if_measure("ful"); break; }
            if (ends("ousness")) { replace_if_measure("ous"); break; }
            break;
        case 't':
            if (ends("aliti")) { replace_if_measure("al"); break; }
            if (ends("iviti")) { replace_if_measure("ive"); break; }
            if (ends("biliti")) { replace_if_measure("ble"); break; }
            break;
        case 'g':
            if (ends("logi")) { replace_if_measure("log"); break; }
            break;
        default:
            break;
        }
    }

    void step3() {
        switch (word[static_cast<std::size_t>(end)]) {
        case 'e':
            if (ends("icate")) { replace_if_measure("ic"); break; }
            if (ends("ative")) { replace_if_measure(""); break; }
            if (ends("alize")) { replace_if_measure("al"); break; }
            break;
        case 'i':
            if (ends("iciti")) { replace_if_measure("ic"); break; }
            break;
        case 'l':
            if (ends("ical")) { replace_if_measure("ic"); break; }
            if (ends("ful")) { replace_if_measure(""); break; }
            break;
        case 's':
            if (ends("ness")) { replace_if_measure(""); break; }
            break;
        default:
            break;
        }
    }

    // -ant, -ence etc. removed when the measure is high enough
    void step4() {
        if (end < 1)
            return;
        switch (word[static_cast<std::size_t>(end - 1)]) {
        case 'a':
            if (ends("al")) break;
            return;
        case 'c':
            if (ends("ance")) break;
            if (ends("ence")) break;
            return;
        case 'e':
            if (ends("er")) break;
            return;
        case 'i':
            if (ends("ic")) break;
            return;
        case 'l':
            if (ends("able")) break;
            if (ends("ible")) break;
            return;
        case 'n':
            if (ends("ant")) break;
            if (ends("ement")) break;
            if (ends("ment")) break;
            if (ends("ent")) break;
            return;
        case 'o':
            if (ends("ion") && stem_end >= 0 &&
                (word[static_cast<std::size_t>(stem_end)] == 's' ||
                 word[static_cast<std::size_t>(stem_end)] == 't'))
                break;
            if (ends("ou")) break;
            return;
        case 's':
            if (ends("ism")) break;
            return;
        case 't':
            if (ends("ate")) break;
            if (ends("iti")) break;
            return;
        case 'u':
            if (ends("ous")) break;
            return;
        case 'v':
            if (ends("ive")) break;
            return;
        case 'z':
            if (ends("ize")) break;
            return;
        default:
            return;
        }
        if (measure() > 1)
            end = stem_end;
    }

    void step5() {
        stem_end = end;
        if (word[static_cast<std::size_t>(end)] == 'e') {
            const int m = measure();
            if (m > 1 || (m == 1 && !cvc(end - 1)))
                --end;
        }
        if (word[static_cast<std::size_t>(end)] == 'l' && double_consonant(end)) {
            stem_end = end;
            if (measure() > 1)
                --end;
        }
    }

    std::string stem() {
        if (word.size() <= 2)
            return word;
        end = static_cast<int>(word.size()) - 1;
        step1ab();
        step1c();
        step2();
        step3();
        step4();
        step5();
        word.resize(static_cast<std::size_t>(end) + 1);
        return word;
    }
};

} // namespace

std::string porter_stem(std::string_view token) {
    Stemmer s;
    s.word.assign(token);
    return s.stem();
}

} // namespace textrank
