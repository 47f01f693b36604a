#pragma once

#include <string>

#include "artin/certificate.hpp"

namespace artin {

/// One named check with an optional failure witness, rendered by the CLI.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

// Every verifier below recomputes from definitions, taking only the algebra
// and certificate data — never pipeline intermediate state.

/// Sum equation and all n^4 product relations, exactly.
Report verify_matrix_units(const Algebra& a, const MatrixUnits& mu);

/// Corner consistency (embedding + table), multiplicativity on all basis
/// pairs, unity to identity matrix, backward o forward = id on basis, and
/// dim(A) = n^2 dim(corner).
Report verify_isomorphism(const Algebra& a, const Isomorphism& iso);

struct DivisionRingResult {
  Report report;
  DivisionRingInfo info;
  std::optional<Element> not_invertible;  // local coordinates, when failed
};

/// Every nonzero element two-sided invertible: exhaustive when the corner
/// has at most 2^16 elements, otherwise all basis elements plus 64 seeded
/// samples (marked sampled, not exhaustive). Also reports commutativity.
DivisionRingResult verify_division_ring(const CornerAlgebra& c, uint64_t seed = 0);

/// a != 0, b != 0, and a x_i b = 0 for every basis x_i.
Report verify_not_prime_witness(const Algebra& a, const Element& wa, const Element& wb);

struct PrimeProbe {
  bool ideal_level_witness = false;    // nonzero left ideals I, J with IJ = 0 exist
  bool element_level_witness = false;  // nonzero a, b with aRb = 0 exist
  size_t left_ideal_count = 0;
  Report report;
};

/// Test-only probe for tiny algebras: enumerates every left ideal (principal
/// ideals closed under sums) and checks that the ideal-level and
/// element-level primeness criteria agree. Throws TooLarge above 2^12
/// elements.
PrimeProbe prime_equivalence_probe(const Algebra& a);

/// Dispatches to every verifier applicable to the certificate.
Report verify_certificate(const Algebra& a, const Certificate& cert, uint64_t seed = 0);

std::string render(const Report& r);

}  // namespace artin
