#include <algorithm>
#include <array>
#include <cstdio>

#include "kbforge/layout_io.hpp"

namespace kbforge {

namespace {

// Named keysyms, sorted by codepoint. Codepoints without an entry fall back
// to the "U" + hex form.
constexpr auto kKeysyms = std::to_array<KeysymEntry>({
    {0x0020, "space"},
    {0x0021, "exclam"},
    {0x0022, "quotedbl"},
    {0x0023, "numbersign"},
    {0x0024, "dollar"},
    {0x0025, "percent"},
    {0x0026, "ampersand"},
    {0x0027, "apostrophe"},
    {0x0028, "parenleft"},
    {0x0029, "parenright"},
    {0x002A, "asterisk"},
    {0x002B, "plus"},
    {0x002C, "comma"},
    {0x002D, "minus"},
    {0x002E, "period"},
    {0x002F, "slash"},
    {0x0030, "0"},
    {0x0031, "1"},
    {0x0032, "2"},
    {0x0033, "3"},
    {0x0034, "4"},
    {0x0035, "5"},
    {0x0036, "6"},
    {0x0037, "7"},
    {0x0038, "8"},
    {0x0039, "9"},
    {0x003A, "colon"},
    {0x003B, "semicolon"},
    {0x003C, "less"},
    {0x003D, "equal"},
    {0x003E, "greater"},
    {0x003F, "question"},
    {0x0040, "at"},
    {0x0041, "A"},
    {0x0042, "B"},
    {0x0043, "C"},
    {0x0044, "D"},
    {0x0045, "E"},
    {0x0046, "F"},
    {0x0047, "G"},
    {0x0048, "H"},
    {0x0049, "I"},
    {0x004A, "J"},
    {0x004B, "K"},
    {0x004C, "L"},
    {0x004D, "M"},
    {0x004E, "N"},
    {0x004F, "O"},
    {0x0050, "P"},
    {0x0051, "Q"},
    {0x0052, "R"},
    {0x0053, "S"},
    {0x0054, "T"},
    {0x0055, "U"},
    {0x0056, "V"},
    {0x0057, "W"},
    {0x0058, "X"},
    {0x0059, "Y"},
    {0x005A, "Z"},
    {0x005B, "bracketleft"},
    {0x005C, "backslash"},
    {0x005D, "bracketright"},
    {0x005E, "asciicircum"},
    {0x005F, "underscore"},
    {0x0060, "grave"},
    {0x0061, "a"},
    {0x0062, "b"},
    {0x0063, "c"},
    {0x0064, "d"},
    {0x0065, "e"},
    {0x0066, "f"},
    {0x0067, "g"},
    {0x0068, "h"},
    {0x0069, "i"},
    {0x006A, "j"},
    {0x006B, "k"},
    {0x006C, "l"},
    {0x006D, "m"},
    {0x006E, "n"},
    {0x006F, "o"},
    {0x0070, "p"},
    {0x0071, "q"},
    {0x0072, "r"},
    {0x0073, "s"},
    {0x0074, "t"},
    {0x0075, "u"},
    {0x0076, "v"},
    {0x0077, "w"},
    {0x0078, "x"},
    {0x0079, "y"},
    {0x007A, "z"},
    {0x007B, "braceleft"},
    {0x007C, "bar"},
    {0x007D, "braceright"},
    {0x007E, "asciitilde"},
    {0x00A0, "nobreakspace"},
    {0x00A3, "sterling"},
    {0x00A5, "yen"},
    {0x00A7, "section"},
    {0x00A9, "copyright"},
    {0x00AB, "guillemotleft"},
    {0x00AC, "notsign"},
    {0x00AE, "registered"},
    {0x00B0, "degree"},
    {0x00B1, "plusminus"},
    {0x00B2, "twosuperior"},
    {0x00B3, "threesuperior"},
    {0x00BB, "guillemotright"},
    {0x00D7, "multiply"},
    {0x00F7, "division"},
    {0x0393, "Greek_GAMMA"},
    {0x0394, "Greek_DELTA"},
    {0x0398, "Greek_THETA"},
    {0x039B, "Greek_LAMBDA"},
    {0x039E, "Greek_XI"},
    {0x03A0, "Greek_PI"},
    {0x03A3, "Greek_SIGMA"},
    {0x03A6, "Greek_PHI"},
    {0x03A8, "Greek_PSI"},
    {0x03A9, "Greek_OMEGA"},
    {0x03B1, "Greek_alpha"},
    {0x03B2, "Greek_beta"},
    {0x03B3, "Greek_gamma"},
    {0x03B4, "Greek_delta"},
    {0x03B5, "Greek_epsilon"},
    {0x03B6, "Greek_zeta"},
    {0x03B7, "Greek_eta"},
    {0x03B8, "Greek_theta"},
    {0x03B9, "Greek_iota"},
    {0x03BA, "Greek_kappa"},
    {0x03BB, "Greek_lambda"},
    {0x03BC, "Greek_mu"},
    {0x03BD, "Greek_nu"},
    {0x03BE, "Greek_xi"},
    {0x03C0, "Greek_pi"},
    {0x03C1, "Greek_rho"},
    {0x03C3, "Greek_sigma"},
    {0x03C4, "Greek_tau"},
    {0x03C5, "Greek_upsilon"},
    {0x03C6, "Greek_phi"},
    {0x03C7, "Greek_chi"},
    {0x03C8, "Greek_psi"},
    {0x03C9, "Greek_omega"},
    {0x0410, "Cyrillic_A"},
    {0x0411, "Cyrillic_BE"},
    {0x0412, "Cyrillic_VE"},
    {0x0413, "Cyrillic_GHE"},
    {0x0414, "Cyrillic_DE"},
    {0x0415, "Cyrillic_IE"},
    {0x0416, "Cyrillic_ZHE"},
    {0x0417, "Cyrillic_ZE"},
    {0x0418, "Cyrillic_I"},
    {0x0419, "Cyrillic_SHORTI"},
    {0x041A, "Cyrillic_KA"},
    {0x041B, "Cyrillic_EL"},
    {0x041C, "Cyrillic_EM"},
    {0x041D, "Cyrillic_EN"},
    {0x041E, "Cyrillic_O"},
    {0x041F, "Cyrillic_PE"},
    {0x0420, "Cyrillic_ER"},
    {0x0421, "Cyrillic_ES"},
    {0x0422, "Cyrillic_TE"},
    {0x0423, "Cyrillic_U"},
    {0x0424, "Cyrillic_EF"},
    {0x0425, "Cyrillic_HA"},
    {0x0426, "Cyrillic_TSE"},
    {0x0427, "Cyrillic_CHE"},
    {0x0428, "Cyrillic_SHA"},
    {0x0429, "Cyrillic_SHCHA"},
    {0x042A, "Cyrillic_HARDSIGN"},
    {0x042B, "Cyrillic_YERU"},
    {0x042C, "Cyrillic_SOFTSIGN"},
    {0x042D, "Cyrillic_E"},
    {0x042E, "Cyrillic_YU"},
    {0x042F, "Cyrillic_YA"},
    {0x0430, "Cyrillic_a"},
    {0x0431, "Cyrillic_be"},
    {0x0432, "Cyrillic_ve"},
    {0x0433, "Cyrillic_ghe"},
    {0x0434, "Cyrillic_de"},
    {0x0435, "Cyrillic_ie"},
    {0x0436, "Cyrillic_zhe"},
    {0x0437, "Cyrillic_ze"},
    {0x0438, "Cyrillic_i"},
    {0x0439, "Cyrillic_shorti"},
    {0x043A, "Cyrillic_ka"},
    {0x043B, "Cyrillic_el"},
    {0x043C, "Cyrillic_em"},
    {0x043D, "Cyrillic_en"},
    {0x043E, "Cyrillic_o"},
    {0x043F, "Cyrillic_pe"},
    {0x0440, "Cyrillic_er"},
    {0x0441, "Cyrillic_es"},
    {0x0442, "Cyrillic_te"},
    {0x0443, "Cyrillic_u"},
    {0x0444, "Cyrillic_ef"},
    {0x0445, "Cyrillic_ha"},
    {0x0446, "Cyrillic_tse"},
    {0x0447, "Cyrillic_che"},
    {0x0448, "Cyrillic_sha"},
    {0x0449, "Cyrillic_shcha"},
    {0x044A, "Cyrillic_hardsign"},
    {0x044B, "Cyrillic_yeru"},
    {0x044C, "Cyrillic_softsign"},
    {0x044D, "Cyrillic_e"},
    {0x044E, "Cyrillic_yu"},
    {0x044F, "Cyrillic_ya"},
    {0x2013, "endash"},
    {0x2014, "emdash"},
    {0x2018, "leftsinglequotemark"},
    {0x2019, "rightsinglequotemark"},
    {0x201C, "leftdoublequotemark"},
    {0x201D, "rightdoublequotemark"},
    {0x201E, "doublelowquotemark"},
    {0x2020, "dagger"},
    {0x2022, "enfilledcircbullet"},
    {0x2026, "ellipsis"},
    {0x20AC, "EuroSign"},
    {0x2116, "numerosign"},
    {0x2122, "trademark"},
    {0x2207, "nabla"},
    {0x221E, "infinity"},
    {0x2227, "logicaland"},
    {0x2228, "logicalor"},
    {0x2229, "intersection"},
    {0x222A, "union"},
    {0x222B, "integral"},
    {0x2260, "notequal"},
    {0x2261, "identical"},
    {0x2282, "includedin"},
    {0x22A5, "downtack"},
});

bool is_fallback_name(std::string_view name) {
    if (name.size() < 5 || name.size() > 7 || name[0] != 'U') return false;
    for (char c : name.substr(1)) {
        if (!((c >= '0' && c <= '9') || (c >= 'A' && c <= 'F'))) return false;
    }
    return true;
}

}  // namespace

std::span<const KeysymEntry> keysym_table() {
    return kKeysyms;
}

std::string keysym_for(CodePoint cp) {
    auto it = std::lower_bound(kKeysyms.begin(), kKeysyms.end(), cp.value,
                               [](const KeysymEntry& e, char32_t v) { return e.codepoint < v; });
    if (it != kKeysyms.end() && it->codepoint == cp.value) return std::string(it->name);
    char buf[10];
    std::snprintf(buf, sizeof buf, "U%04X", static_cast<unsigned>(cp.value));
    return buf;
}

CodePoint codepoint_for_keysym(std::string_view name) {
    for (const KeysymEntry& entry : kKeysyms) {
        if (entry.name == name) return CodePoint(entry.codepoint);
    }
    if (is_fallback_name(name)) {
        if (auto cp = CodePoint::parse("U+" + std::string(name.substr(1)))) return *cp;
    }
    throw Error("unknown keysym \"" + std::string(name) + "\"");
}

}  // namespace kbforge
