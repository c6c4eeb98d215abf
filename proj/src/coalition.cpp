#include "coopint/coalition.hpp"

#include <cctype>

namespace coopint {

std::string coalition_key(Coalition s) {
    std::string out;
    for (int i : s.members()) {
        if (!out.empty()) out += ',';
        out += std::to_string(i + 1);
    }
    return out;
}

Coalition parse_coalition_key(const std::string& key, int n) {
    if (key.empty())
        throw GameFileError("non-canonical coalition key: \"" + key + "\"");
    Coalition s;
    int prev = 0;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t end = key.find(',', pos);
        if (end == std::string::npos) end = key.size();
        std::string tok = key.substr(pos, end - pos);
        if (tok.empty() || tok.size() > 2 ||
            (tok.size() == 2 && tok[0] == '0'))
            throw GameFileError("non-canonical coalition key: \"" + key + "\"");
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw GameFileError("non-canonical coalition key: \"" + key +
                                    "\"");
        int player = std::stoi(tok);
        if (player <= prev || player > n)
            throw GameFileError("non-canonical coalition key: \"" + key + "\"");
        s = s.with(player - 1);
        prev = player;
        pos = end + 1;
        if (end == key.size()) break;
        if (pos >= key.size())
            throw GameFileError("non-canonical coalition key: \"" + key + "\"");
    }
    return s;
}

} // namespace coopint
