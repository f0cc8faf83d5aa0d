#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knowflow {

// Generic function format: an operand being changed by an operation.
enum class Operand { Information, Energy, Material };
enum class Operation { Storage, Transportation, Transformation };

struct Domain {
    std::string abbrev;
    std::string name;
    Operand operand{};
    Operation operation{};

    bool operator==(const Domain&) const = default;
};

// Ordered set of domains. The ordering is fixed at construction and is the
// node ordering used by every matrix downstream.
class DomainTable {
public:
    // Preserves the given order. Requires >= 2 domains and unique abbrevs.
    explicit DomainTable(std::vector<Domain> domains);

    // Canonical construction: sorts lexicographically by abbrev.
    static DomainTable sorted(std::vector<Domain> domains);

    std::size_t size() const { return domains_.size(); }
    const Domain& at(std::size_t i) const { return domains_.at(i); }
    const std::vector<Domain>& all() const { return domains_; }

    std::optional<std::size_t> index_of(std::string_view abbrev) const;
    // Like index_of but throws std::invalid_argument for unknown abbrevs.
    std::size_t require(std::string_view abbrev) const;

    bool operator==(const DomainTable& other) const {
        return domains_ == other.domains_;
    }

private:
    std::vector<Domain> domains_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

// Half-open in neither sense: [start_year, end_year], both inclusive.
struct PeriodWindow {
    std::string label;
    int start_year{};
    int end_year{};

    bool contains(int year) const { return year >= start_year && year <= end_year; }
    bool operator==(const PeriodWindow&) const = default;
};

// Throws std::invalid_argument unless windows are valid (start <= end),
// pairwise disjoint, ascending, and uniquely labeled.
void validate_windows(const std::vector<PeriodWindow>& windows);

enum class LinkClass { Strong, Weak, Zero };

enum class FunctionalClass {
    SameFunction,        // same operand, same operation
    DifferentOperand,    // same operation only
    DifferentOperation,  // same operand only
    DifferentBoth
};

// Classifies the functional relation of a domain pair. Symmetric. The two
// domains must differ (compared by abbrev).
FunctionalClass functional_class(const Domain& a, const Domain& b);

std::string_view to_string(Operand v);
std::string_view to_string(Operation v);
std::string_view to_string(LinkClass v);
std::string_view to_string(FunctionalClass v);
Operand parse_operand(std::string_view s);
Operation parse_operation(std::string_view s);

// domains.csv: header `abbrev,name,operand,operation`. Rows may appear in
// any order; the resulting table is sorted by abbrev.
DomainTable load_domains_csv(std::istream& in);
void save_domains_csv(std::ostream& out, const DomainTable& table);

// windows.json: {"windows":[{"label":"T1","start":1976,"end":1979}, ...]}
std::vector<PeriodWindow> load_windows_json(std::istream& in);

}  // namespace knowflow
