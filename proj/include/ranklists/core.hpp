#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ranklists {

// Bad input (duplicate tokens, malformed files, non-positive weights, ...).
// Distinct from internal errors so the CLI can map it to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An ordered list of distinct element tokens. The rank of the element at
/// position p is p (1-based).
class RankedList {
  public:
    RankedList() = default;
    explicit RankedList(std::vector<std::string> elements);

    const std::vector<std::string>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::string& at(std::size_t pos0) const { return elements_[pos0]; }

    bool operator==(const RankedList&) const = default;

  private:
    std::vector<std::string> elements_;
};

/// Token -> positive weight, with a positive default for absent tokens.
class WeightTable {
  public:
    WeightTable() = default;
    explicit WeightTable(double default_weight);

    void set(const std::string& token, double weight);
    double get(const std::string& token) const;
    double default_weight() const { return default_weight_; }

    // JSON object {token: number, "__default__"?: number}, all numbers > 0.
    static WeightTable from_json_text(std::string_view text);

  private:
    std::unordered_map<std::string, double> entries_;
    double default_weight_ = 1.0;
};

/// Two completed, same-universe lists reduced to rank form. universe holds the
/// tokens in reference (first-list) order; pi_ranks[i] is the 1-based rank in
/// the second list of the element whose reference rank is i+1. pi_ranks is a
/// permutation of {1..n} and the reference list's own rank vector is the
/// identity.
struct AlignedPair {
    std::vector<std::string> universe;
    std::vector<int> pi_ranks;

    int size() const { return static_cast<int>(universe.size()); }
};

enum class ListFormat { Plain, Json };

/// Plain: one token per line (LF or CRLF), blank lines ignored.
/// Json: flat array of strings.
RankedList parse_ranked_list(std::string_view text, ListFormat format);

/// Auto-detect: leading '[' (after whitespace) means JSON.
ListFormat detect_list_format(std::string_view text);

/// Complete two duplicate-free lists to permutations of their union. Each
/// list keeps its own elements at their existing ranks; the elements it is
/// missing are appended in the relative order they appear in the other list.
std::pair<RankedList, RankedList> complete_pair(const RankedList& a, const RankedList& b);

/// Relabel two completed lists (permutations of each other) into rank form
/// with the first list as reference.
AlignedPair align(const RankedList& a_complete, const RankedList& b_complete);

}  // namespace ranklists
