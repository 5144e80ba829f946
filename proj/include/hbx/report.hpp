#ifndef HBX_REPORT_HPP
#define HBX_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hbx/morphism.hpp"

namespace hbx {

/* Outcome of one axiom-suite run. Checkers record every law they evaluate
 * and, per failing law, the first witness: the source basis indices (split
 * by tensor factor), the target index, and the two conflicting entries.
 *
 * A violation of kind `internal` marks a law that is a consequence of the
 * primary ones; if it fails while the primary laws pass, that indicates a
 * bug in the checker itself rather than in the data, and reports keep the
 * two classes apart. */
struct Violation {
    enum class Kind { law, internal };

    std::string law;
    std::vector<size_t> where;  // source factor indices, then target index
    std::string lhs, rhs;
    Kind kind = Kind::law;
};

class CheckReport {
  public:
    explicit CheckReport(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    bool passed() const { return violations_.empty(); }
    const std::vector<Violation>& violations() const { return violations_; }
    const std::vector<std::string>& laws() const { return laws_; }

    bool law_failed(std::string_view law) const;
    bool law_checked(std::string_view law) const;

    // Records a law as checked-and-passed.
    void pass(const std::string& law);
    void fail(Violation v);

    // Compares two realizations of the same map and records the law; on
    // mismatch the witness decomposes the source index by `factor_dims`
    // (empty = treat the source as a single factor).
    void equal(const std::string& law, const Morphism& lhs, const Morphism& rhs,
               const std::vector<size_t>& factor_dims = {},
               Violation::Kind kind = Violation::Kind::law);

    // Imports a sub-suite with its law names prefixed ("hopf1." etc.);
    // as_internal downgrades its violations to the internal class.
    void absorb(const CheckReport& sub, const std::string& prefix, bool as_internal = false);

    // Laws and violations in ascending law-name order.
    std::string str() const;

  private:
    std::string name_;
    std::vector<std::string> laws_;
    std::vector<Violation> violations_;
};

}  // namespace hbx

#endif
