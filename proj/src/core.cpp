#include "ranklists/core.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <json.hpp>

namespace ranklists {

RankedList::RankedList(std::vector<std::string> elements) : elements_(std::move(elements)) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(elements_.size());
    for (const auto& tok : elements_) {
        if (!seen.insert(tok).second) {
            throw ValidationError("duplicate token \"" + tok + "\" in ranked list");
        }
    }
}

WeightTable::WeightTable(double default_weight) {
    if (!(default_weight > 0.0) || !std::isfinite(default_weight)) {
        throw ValidationError("non-positive weight for \"__default__\"");
    }
    default_weight_ = default_weight;
}

void WeightTable::set(const std::string& token, double weight) {
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw ValidationError("non-positive weight for \"" + token + "\"");
    }
    entries_[token] = weight;
}

double WeightTable::get(const std::string& token) const {
    auto it = entries_.find(token);
    return it == entries_.end() ? default_weight_ : it->second;
}

WeightTable WeightTable::from_json_text(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw ValidationError("malformed weight file: expected a JSON object {token: number}");
    }
    WeightTable table;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number()) {
            throw ValidationError("malformed weight file: value for \"" + key + "\" is not a number");
        }
        double w = value.get<double>();
        if (key == "__default__") {
            table = WeightTable(w);  // re-validate via constructor
            break;
        }
    }
    // Second pass so __default__ placement in the object does not matter.
    for (const auto& [key, value] : doc.items()) {
        if (key == "__default__") continue;
        table.set(key, value.get<double>());
    }
    return table;
}

ListFormat detect_list_format(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        return c == '[' ? ListFormat::Json : ListFormat::Plain;
    }
    return ListFormat::Plain;
}

RankedList parse_ranked_list(std::string_view text, ListFormat format) {
    std::vector<std::string> tokens;
    if (format == ListFormat::Json) {
        nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_discarded() || !doc.is_array()) {
            throw ValidationError("malformed list file: expected a JSON array of strings");
        }
        for (const auto& item : doc) {
            if (!item.is_string()) {
                throw ValidationError("malformed list file: array elements must be strings");
            }
            tokens.push_back(item.get<std::string>());
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            std::string_view line =
                text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!line.empty()) tokens.emplace_back(line);
            if (end == std::string_view::npos) break;
            start = end + 1;
        }
    }
    return RankedList(std::move(tokens));
}

std::pair<RankedList, RankedList> complete_pair(const RankedList& a, const RankedList& b) {
    if (a.empty() && b.empty()) {
        throw ValidationError("both lists are empty");
    }
    auto complete = [](const RankedList& own, const RankedList& other) {
        std::unordered_set<std::string_view> have;
        for (const auto& tok : own.elements()) have.insert(tok);
        std::vector<std::string> out = own.elements();
        for (const auto& tok : other.elements()) {
            if (!have.count(tok)) out.push_back(tok);
        }
        return RankedList(std::move(out));
    };
    return {complete(a, b), complete(b, a)};
}

AlignedPair align(const RankedList& a_complete, const RankedList& b_complete) {
    if (a_complete.size() != b_complete.size()) {
        throw ValidationError("lists are not permutations of each other (sizes differ)");
    }
    std::unordered_map<std::string_view, int> pos_in_b;
    pos_in_b.reserve(b_complete.size());
    for (std::size_t p = 0; p < b_complete.size(); ++p) {
        pos_in_b.emplace(b_complete.at(p), static_cast<int>(p) + 1);
    }
    AlignedPair pair;
    pair.universe = a_complete.elements();
    pair.pi_ranks.reserve(a_complete.size());
    for (const auto& tok : a_complete.elements()) {
        auto it = pos_in_b.find(tok);
        if (it == pos_in_b.end()) {
            throw ValidationError("lists are not permutations of each other (\"" + tok +
                                  "\" missing from second list)");
        }
        pair.pi_ranks.push_back(it->second);
    }
    return pair;
}

}  // namespace ranklists
