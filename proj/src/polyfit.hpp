// Grid evaluation of curve counts over tangency-profile templates, exact
// rational polynomial interpolation per chamber of a wall arrangement, and
// the piecewise-polynomiality scan report.
#pragma once

#include <optional>

#include "counting.hpp"
#include "subfloor.hpp"

namespace tropc {

// Affine integer expression: constant + sum of coeff * variable.
struct LinExpr {
  Int constant = 0;
  std::map<std::string, Int> terms;

  Int evaluate(const std::map<std::string, Int>& vars) const;
  bool is_constant() const { return terms.empty(); }
  // Accepts sums of terms like "3", "n1", "2*n1"; '+' and '-' separators.
  static LinExpr parse(const std::string& text);
};

// Tangency profile whose entries may contain variables. Instantiated entries
// are sorted into partitions, so symmetric assignments like (1,2) are fine.
struct ProfileTemplate {
  std::vector<LinExpr> mu1, mu2, nu1, nu2;

  std::vector<std::string> variables() const;  // sorted, unique
  TangencyProfile instantiate(const std::map<std::string, Int>& vars) const;
};

// The wall sum(x_i, i in I) = sum(x_j, j in J) between two disjoint sets of
// variables.
struct Wall {
  std::vector<std::string> lhs, rhs;
};

// All walls between disjoint nonempty subsets of the variables, each pair
// once, in a deterministic order.
std::vector<Wall> default_walls(const std::vector<std::string>& variables);

enum class CountMethod { Lattice, Subfloor, Both };

struct GridSample {
  std::map<std::string, Int> assignment;
  std::optional<BigInt> lattice, subfloor;
  bool agree = true;

  const BigInt& count() const;  // lattice when present, else subfloor
};

// Per-variable inclusive integer ranges.
using VarRanges = std::map<std::string, std::pair<Int, Int>>;

std::vector<GridSample> evaluate_grid(const ProfileTemplate& tmpl, const VarRanges& ranges,
                                      Int genus, CountMethod method,
                                      const CountOptions& options = {});

// Sign (+1 / -1) of lhs - rhs per wall; throws OnWall at equality.
std::vector<int> chamber_of(const std::map<std::string, Int>& assignment,
                            const std::vector<Wall>& walls);

using Monomial = std::vector<int>;  // exponent per variable, parallel order

struct Polynomial {
  std::vector<std::string> variables;
  std::map<Monomial, mpq_class> coefficients;  // nonzero entries only

  mpq_class evaluate(const std::map<std::string, Int>& assignment) const;
  // Canonical text: monomials in graded-lex descending order, e.g.
  // "10*n1^3*n2 + 20*n1^2*n2^2 + 10*n1*n2^3".
  std::string to_string() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// Exact interpolation over all monomials with per-variable degree at most
// degree_bound. Needs at least as many samples as monomials
// (InsufficientSamples); every sample must be reproduced exactly (FitFailed).
Polynomial fit_polynomial(const std::vector<GridSample>& samples,
                          const std::vector<std::string>& variables, int degree_bound);

struct ChamberFit {
  std::vector<int> signature;
  std::size_t sample_count = 0;
  std::optional<Polynomial> polynomial;
  std::string status;  // "ok", "insufficient-samples" or "fit-failed"
};

struct ScanReport {
  std::vector<std::string> variables;
  std::vector<Wall> walls;
  std::vector<GridSample> samples;
  std::vector<ChamberFit> chambers;
  // Set when one polynomial reproduces every sample, walls included.
  std::optional<Polynomial> global;
  bool methods_agree = true;
};

// Evaluates the grid, splits samples by chamber, fits each chamber and a
// global candidate. Per-chamber InsufficientSamples/FitFailed are recorded
// in the report; other errors propagate.
ScanReport verify_chambers(const ProfileTemplate& tmpl, const std::vector<Wall>& walls,
                           const VarRanges& ranges, int degree_bound, Int genus,
                           CountMethod method, const CountOptions& options = {});

}  // namespace tropc
