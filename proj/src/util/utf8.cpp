#include "seatcast/util/utf8.hpp"

namespace seatcast::utf8 {

char32_t decode(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kReplacement;
    }
    if (i + static_cast<std::size_t>(len) > s.size()) {
        ++i;
        return kReplacement;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    i += static_cast<std::size_t>(len);
    if (cp > 0x10FFFF) return kReplacement;
    return cp;
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_letter(char32_t cp) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
    if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;  // Latin-1 letters
    if (cp >= 0x100 && cp <= 0x17F) return true;                            // Latin Extended-A
    return false;
}

bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

char32_t to_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp == 0x178) return 0xFF;  // Ÿ -> ÿ
    // Latin Extended-A mostly alternates upper/lower code points.
    if (cp >= 0x100 && cp <= 0x137 && (cp % 2) == 0) return cp + 1;
    if (cp >= 0x139 && cp <= 0x148 && (cp % 2) == 1) return cp + 1;
    if (cp >= 0x14A && cp <= 0x177 && (cp % 2) == 0) return cp + 1;
    if (cp >= 0x179 && cp <= 0x17E && (cp % 2) == 1) return cp + 1;
    return cp;
}

namespace {

// Base letter for accented Latin-1 / Latin Extended-A lowercase letters;
// returns 0 when there is no single-character fold.
char fold_single(char32_t cp) {
    switch (cp) {
        case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5:
            return 'a';
        case 0xE7:
            return 'c';
        case 0xE8: case 0xE9: case 0xEA: case 0xEB:
            return 'e';
        case 0xEC: case 0xED: case 0xEE: case 0xEF:
            return 'i';
        case 0xF1:
            return 'n';
        case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8:
            return 'o';
        case 0xF9: case 0xFA: case 0xFB: case 0xFC:
            return 'u';
        case 0xFD: case 0xFF:
            return 'y';
        default:
            break;
    }
    if (cp >= 0x100 && cp <= 0x105) return 'a';
    if (cp >= 0x106 && cp <= 0x10D) return 'c';
    if (cp >= 0x10E && cp <= 0x111) return 'd';
    if (cp >= 0x112 && cp <= 0x11B) return 'e';
    if (cp >= 0x11C && cp <= 0x123) return 'g';
    if (cp >= 0x124 && cp <= 0x127) return 'h';
    if (cp >= 0x128 && cp <= 0x131) return 'i';
    if (cp >= 0x134 && cp <= 0x135) return 'j';
    if (cp >= 0x136 && cp <= 0x138) return 'k';
    if (cp >= 0x139 && cp <= 0x142) return 'l';
    if (cp >= 0x143 && cp <= 0x14B) return 'n';
    if (cp >= 0x14C && cp <= 0x151) return 'o';
    if (cp >= 0x154 && cp <= 0x159) return 'r';
    if (cp >= 0x15A && cp <= 0x161) return 's';
    if (cp >= 0x162 && cp <= 0x167) return 't';
    if (cp >= 0x168 && cp <= 0x173) return 'u';
    if (cp >= 0x174 && cp <= 0x175) return 'w';
    if (cp >= 0x176 && cp <= 0x178) return 'y';
    if (cp >= 0x179 && cp <= 0x17E) return 'z';
    return 0;
}

}  // namespace

void fold_append(std::string& out, char32_t cp) {
    cp = to_lower(cp);
    if (cp == 0xE6) {  // æ
        out += "ae";
        return;
    }
    if (cp == 0x153) {  // œ
        out += "oe";
        return;
    }
    if (cp == 0xDF) {  // ß
        out += "ss";
        return;
    }
    if (const char base = fold_single(cp); base != 0) {
        out.push_back(base);
        return;
    }
    append(out, cp);
}

std::string lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) append(out, to_lower(decode(s, i)));
    return out;
}

std::string fold(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) fold_append(out, decode(s, i));
    return out;
}

}  // namespace seatcast::utf8
