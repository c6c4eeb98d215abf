#include "coopint/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "coopint/rational.hpp"

namespace coopint {

namespace {

using nlohmann::json;

// DOM builder that keeps numeric literals exact: every number arrives as
// its raw token text and is stored as a string.
class RawNumberSax : public nlohmann::json_sax<json> {
public:
    json result;

    bool null() override { return emplace(nullptr); }
    bool boolean(bool v) override { return emplace(v); }
    bool number_integer(number_integer_t v) override {
        return emplace(std::to_string(v));
    }
    bool number_unsigned(number_unsigned_t v) override {
        return emplace(std::to_string(v));
    }
    bool number_float(number_float_t, const string_t& raw) override {
        return emplace(raw);
    }
    bool string(string_t& v) override { return emplace(v); }
    bool binary(binary_t&) override {
        throw GameFileError("binary values not allowed");
    }
    bool start_object(std::size_t) override {
        keys_.push_back(key_);
        stack_.push_back(json::object());
        return true;
    }
    bool key(string_t& k) override {
        key_ = k;
        return true;
    }
    bool end_object() override { return pop(); }
    bool start_array(std::size_t) override {
        keys_.push_back(key_);
        stack_.push_back(json::array());
        return true;
    }
    bool end_array() override { return pop(); }
    bool parse_error(std::size_t, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        throw GameFileError(std::string("invalid JSON: ") + ex.what());
    }

private:
    bool emplace(json value) {
        if (stack_.empty()) {
            result = std::move(value);
        } else if (stack_.back().is_array()) {
            stack_.back().push_back(std::move(value));
        } else {
            stack_.back()[key_] = std::move(value);
        }
        return true;
    }

    bool pop() {
        json done = std::move(stack_.back());
        stack_.pop_back();
        key_ = std::move(keys_.back());
        keys_.pop_back();
        return emplace(std::move(done));
    }

    std::vector<json> stack_;
    std::vector<std::string> keys_;
    std::string key_;
};

Rational endpoint_value(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw GameFileError("interval endpoint must be a number or \"p/q\" string");
}

} // namespace

IntervalGame parse_game_text(const std::string& text) {
    RawNumberSax sax;
    json::sax_parse(text, &sax);
    const json& doc = sax.result;

    if (!doc.is_object() || !doc.contains("players") ||
        !doc.contains("coalitions"))
        throw GameFileError("game file must have \"players\" and \"coalitions\"");

    long players = 0;
    try {
        const Rational p = endpoint_value(doc["players"]);
        if (p.get_den() != 1) throw GameFileError("");
        players = p.get_num().get_si();
    } catch (const GameFileError&) {
        throw GameFileError("\"players\" must be an integer");
    }
    if (players < 1 || players > kMaxPlayers)
        throw GameFileError("player count outside 1.." +
                            std::to_string(kMaxPlayers));
    const int n = static_cast<int>(players);

    const json& coalitions = doc["coalitions"];
    if (!coalitions.is_object())
        throw GameFileError("\"coalitions\" must be an object");

    IntervalGame game(n);
    std::vector<bool> seen(std::size_t(1) << n, false);
    for (const auto& [key, value] : coalitions.items()) {
        const Coalition s = parse_coalition_key(key, n);
        if (seen[s.bits()])
            throw GameFileError("duplicate coalition key: \"" + key + "\"");
        seen[s.bits()] = true;
        if (!value.is_array() || value.size() != 2)
            throw GameFileError("coalition \"" + key +
                                "\" must map to a two-element interval");
        const Rational lo = endpoint_value(value[0]);
        const Rational hi = endpoint_value(value[1]);
        if (lo > hi)
            throw GameFileError("coalition \"" + key +
                                "\": lower endpoint exceeds upper");
        game.set_value(s, Interval(lo, hi));
    }

    const std::uint32_t full = game.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (!seen[s])
            throw GameFileError("incomplete characteristic function: missing "
                                "coalition \"" +
                                coalition_key(Coalition(s)) + "\"");
    }
    return game;
}

IntervalGame parse_game_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GameFileError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game_text(buf.str());
}

std::string serialize_game(const IntervalGame& w) {
    json coalitions = json::object();
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        const Interval& iv = w.value(c);
        coalitions[coalition_key(c)] = {to_fraction_string(iv.lower()),
                                        to_fraction_string(iv.upper())};
    }
    json doc;
    doc["players"] = w.players();
    doc["coalitions"] = std::move(coalitions);
    return doc.dump(2) + "\n";
}

void write_game_file(const IntervalGame& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GameFileError("cannot write file: " + path);
    out << serialize_game(w);
}

} // namespace coopint
