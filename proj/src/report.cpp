#include "hbx/report.hpp"

#include <algorithm>
#include <sstream>

namespace hbx {

bool CheckReport::law_failed(std::string_view law) const {
    for (const auto& v : violations_)
        if (v.law == law)
            return true;
    return false;
}

bool CheckReport::law_checked(std::string_view law) const {
    for (const auto& l : laws_)
        if (l == law)
            return true;
    return false;
}

void CheckReport::pass(const std::string& law) { laws_.push_back(law); }

void CheckReport::fail(Violation v) {
    laws_.push_back(v.law);
    violations_.push_back(std::move(v));
}

void CheckReport::equal(const std::string& law, const Morphism& lhs, const Morphism& rhs,
                        const std::vector<size_t>& factor_dims, Violation::Kind kind) {
    if (lhs.src() != rhs.src() || lhs.dst() != rhs.dst())
        throw shape_error("law '" + law + "' compares maps with different endpoints");
    for (size_t col = 0; col < lhs.cols(); ++col) {
        for (size_t row = 0; row < lhs.rows(); ++row) {
            if (lhs.at(row, col) == rhs.at(row, col))
                continue;
            Violation v;
            v.law = law;
            v.kind = kind;
            if (factor_dims.empty()) {
                v.where = {col, row};
            } else {
                size_t rest = col;
                std::vector<size_t> idx(factor_dims.size());
                for (size_t k = factor_dims.size(); k-- > 0;) {
                    idx[k] = rest % factor_dims[k];
                    rest /= factor_dims[k];
                }
                v.where = std::move(idx);
                v.where.push_back(row);
            }
            v.lhs = lhs.at(row, col).str();
            v.rhs = rhs.at(row, col).str();
            fail(std::move(v));
            return;
        }
    }
    pass(law);
}

void CheckReport::absorb(const CheckReport& sub, const std::string& prefix, bool as_internal) {
    for (const auto& l : sub.laws_)
        laws_.push_back(prefix + l);
    for (auto v : sub.violations_) {
        v.law = prefix + v.law;
        if (as_internal)
            v.kind = Violation::Kind::internal;
        violations_.push_back(std::move(v));
    }
}

std::string CheckReport::str() const {
    std::vector<std::string> laws = laws_;
    std::sort(laws.begin(), laws.end());
    std::vector<Violation> sorted = violations_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Violation& a, const Violation& b) { return a.law < b.law; });
    std::ostringstream os;
    os << (passed() ? "PASS " : "FAIL ") << name_ << "\n";
    for (const auto& law : laws) {
        const Violation* hit = nullptr;
        for (const auto& v : sorted)
            if (v.law == law) {
                hit = &v;
                break;
            }
        os << "  " << law << ": ";
        if (!hit) {
            os << "ok\n";
            continue;
        }
        os << (hit->kind == Violation::Kind::internal ? "INTERNAL-INCONSISTENCY" : "FAIL")
           << " at (";
        for (size_t k = 0; k < hit->where.size(); ++k)
            os << (k ? "," : "") << hit->where[k];
        os << ") lhs=" << hit->lhs << " rhs=" << hit->rhs << "\n";
    }
    return os.str();
}

}  // namespace hbx
