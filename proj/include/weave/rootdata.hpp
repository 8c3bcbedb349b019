#pragma once

#include <optional>
#include <string>
#include <vector>

namespace weave {

using IntMatrix = std::vector<std::vector<int>>;
using RootVector = std::vector<int>;

enum class Family { A, B, C, D, E, F, G };

struct DynkinType {
    Family family = Family::A;
    int rank = 1;

    bool operator==(const DynkinType&) const = default;
};

char family_letter(Family f);
std::string to_string(const DynkinType& t);

// Accepts "A3", "E6", "g2" ...
DynkinType parse_dynkin(const std::string& s);

// Throws InvalidArgument when the rank is not allowed for the family.
void validate(const DynkinType& t);

// Humphreys labeling; entry (i,j) is <alpha_i, alpha_j^vee>.
IntMatrix cartan_matrix(const DynkinType& t);

int coxeter_number(const DynkinType& t);

// Sorted by height, then lexicographically.
std::vector<RootVector> positive_roots(const DynkinType& t);

// Negative simple roots first, then the positive roots.
std::vector<RootVector> almost_positive_roots(const DynkinType& t);

// s_i(beta) for the given Cartan matrix.
RootVector simple_reflection(const IntMatrix& cartan, const RootVector& beta, int i);

// Positive integers d with diag(d) * C symmetric, normalized to gcd 1 per
// component. Empty when C is not symmetrizable.
std::optional<std::vector<long>> symmetrizer(const IntMatrix& c);

// Irreducible finite-type components, ordered by smallest vertex. Absent
// when the symmetrization is not positive definite. Throws InvalidArgument
// when c is not a symmetrizable generalized Cartan matrix.
std::optional<std::vector<DynkinType>> classify_finite_cartan(const IntMatrix& c);

}  // namespace weave
