#pragma once

#include "fvset/exact.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fvset {

enum class Status { member, non_member, unknown };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::member: return "member";
        case Status::non_member: return "non_member";
        case Status::unknown: return "unknown";
    }
    return "unknown";
}

/**
 * Three-valued membership answer.
 *
 * `reason` is a short kebab-case code: the first violated condition for a
 * non-member, "satisfied" (or a more specific code) for a member, and
 * "threshold-unknown" when the characterization does not reach the input.
 * `witness` carries parameters realizing membership where one exists.
 */
struct Verdict {
    Status status = Status::unknown;
    std::string reason;
    std::vector<Integer> witness;

    bool is_member() const { return status == Status::member; }

    static Verdict member(std::string reason = "satisfied", std::vector<Integer> witness = {}) {
        return {Status::member, std::move(reason), std::move(witness)};
    }
    static Verdict non_member(std::string reason) { return {Status::non_member, std::move(reason), {}}; }
    static Verdict unknown(std::string reason) { return {Status::unknown, std::move(reason), {}}; }
};

/// Face counts (f_0, ..., f_{d-1}) of a d-dimensional object. Entries are
/// nonnegative; realizability is left to the predicates.
class FVector {
public:
    explicit FVector(std::vector<Integer> f) : f_(std::move(f)) { validate(); }
    FVector(std::initializer_list<long long> f) : f_(f.begin(), f.end()) { validate(); }

    int dim() const { return static_cast<int>(f_.size()); }
    const Integer& operator[](int i) const { return f_.at(static_cast<std::size_t>(i)); }
    const std::vector<Integer>& counts() const { return f_; }

    /// f_{-1} = 1 convention for index -1.
    Integer extended(int i) const { return i == -1 ? Integer(1) : (*this)[i]; }

    friend bool operator==(const FVector&, const FVector&) = default;

private:
    void validate() const {
        if (f_.empty()) throw std::domain_error("FVector: dimension must be positive");
        for (const auto& v : f_)
            if (v < 0) throw std::domain_error("FVector: negative face count");
    }

    std::vector<Integer> f_;
};

inline void require_dimension(const FVector& v, int d) {
    if (v.dim() != d)
        throw std::domain_error("expected a " + std::to_string(d) + "-dimensional f-vector, got dimension " +
                                std::to_string(v.dim()));
}

}  // namespace fvset
