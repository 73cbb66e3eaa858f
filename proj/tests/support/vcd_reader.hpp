// Small independent VCD reader used to verify emitted waveforms. Kept apart
// from the writer on purpose: it parses the text from scratch so writer bugs
// cannot cancel out.
#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcdtest {

struct Change {
    std::int64_t t;
    std::string value;  // "0", "1", or MSB-first bit string for vectors
};

struct ParsedVcd {
    std::map<std::string, int> width;                    // by signal name
    std::map<std::string, std::vector<Change>> changes;  // by signal name

    // time of the n-th transition to `to` (default first), -1 if none
    std::int64_t edge(const std::string& name, const std::string& to, int nth = 0) const {
        auto it = changes.find(name);
        if (it == changes.end()) return -1;
        std::string prev;
        int seen = 0;
        for (const Change& c : it->second) {
            if (c.value == to && prev != to) {
                if (seen++ == nth) return c.t;
            }
            prev = c.value;
        }
        return -1;
    }

    std::string value_at(const std::string& name, std::int64_t t) const {
        auto it = changes.find(name);
        if (it == changes.end()) return {};
        std::string value;
        for (const Change& c : it->second) {
            if (c.t > t) break;
            value = c.value;
        }
        return value;
    }
};

inline ParsedVcd parse_vcd(std::istream& in) {
    ParsedVcd out;
    std::map<std::string, std::string> name_of_id;
    std::string token;
    std::int64_t now = 0;
    bool in_definitions = true;

    while (in >> token) {
        if (in_definitions && token == "$var") {
            std::string type, id, name;
            int width = 0;
            if (!(in >> type >> width >> id >> name)) {
                throw std::runtime_error("vcd: malformed $var");
            }
            std::string end;
            in >> end;
            if (end != "$end") throw std::runtime_error("vcd: $var missing $end");
            name_of_id[id] = name;
            out.width[name] = width;
            continue;
        }
        if (token == "$enddefinitions") {
            in_definitions = false;
            std::string end;
            in >> end;
            continue;
        }
        if (token == "$timescale" || token == "$scope" || token == "$upscope" ||
            token == "$date" || token == "$version" || token == "$comment") {
            std::string payload;
            while (in >> payload && payload != "$end") {
            }
            continue;
        }
        if (token[0] == '$') {
            continue;  // $dumpvars / $end wrapping the initial values
        }
        if (token[0] == '#') {
            now = std::stoll(token.substr(1));
            continue;
        }
        if (token[0] == '0' || token[0] == '1') {
            const std::string id = token.substr(1);
            auto it = name_of_id.find(id);
            if (it == name_of_id.end()) throw std::runtime_error("vcd: unknown id " + id);
            out.changes[it->second].push_back({now, token.substr(0, 1)});
            continue;
        }
        if (token[0] == 'b') {
            std::string id;
            if (!(in >> id)) throw std::runtime_error("vcd: vector change missing id");
            auto it = name_of_id.find(id);
            if (it == name_of_id.end()) throw std::runtime_error("vcd: unknown id " + id);
            out.changes[it->second].push_back({now, token.substr(1)});
            continue;
        }
        // ignore "1ns" style timescale payloads that appear as bare tokens
    }
    return out;
}

inline ParsedVcd parse_vcd(const std::string& text) {
    std::istringstream in(text);
    return parse_vcd(in);
}

}  // namespace vcdtest
