#include "polyfit.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tropc {

Int LinExpr::evaluate(const std::map<std::string, Int>& vars) const {
  Int value = constant;
  for (const auto& [name, coeff] : terms) {
    auto it = vars.find(name);
    if (it == vars.end())
      throw Error(Errc::InvalidInput, "unbound template variable '" + name + "'");
    value += coeff * it->second;
  }
  return value;
}

LinExpr LinExpr::parse(const std::string& text) {
  LinExpr expr;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  if (i == text.size()) throw Error(Errc::InvalidInput, "empty expression");
  bool first = true;
  while (i < text.size()) {
    Int sign = 1;
    skip_ws();
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw Error(Errc::InvalidInput, "expected '+' or '-' in '" + text + "'");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    first = false;
    // term: INT, VAR, or INT*VAR
    Int coeff = 1;
    bool saw_number = false;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      coeff = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i]))
        coeff = coeff * 10 + (text[i++] - '0');
      saw_number = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    std::string name;
    while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
      name += text[i++];
    if (name.empty()) {
      if (!saw_number) throw Error(Errc::InvalidInput, "malformed term in '" + text + "'");
      expr.constant += sign * coeff;
    } else {
      expr.terms[name] += sign * coeff;
      if (expr.terms[name] == 0) expr.terms.erase(name);
    }
    skip_ws();
  }
  return expr;
}

std::vector<std::string> ProfileTemplate::variables() const {
  std::vector<std::string> names;
  for (const auto* part : {&mu1, &mu2, &nu1, &nu2})
    for (const auto& e : *part)
      for (const auto& [name, coeff] : e.terms) names.push_back(name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

TangencyProfile ProfileTemplate::instantiate(const std::map<std::string, Int>& vars) const {
  auto eval_partition = [&](const std::vector<LinExpr>& exprs) {
    Partition p;
    for (const auto& e : exprs) p.parts.push_back(e.evaluate(vars));
    std::sort(p.parts.rbegin(), p.parts.rend());
    p.check();
    return p;
  };
  TangencyProfile profile{eval_partition(mu1), eval_partition(mu2), eval_partition(nu1),
                          eval_partition(nu2)};
  profile.validate();
  return profile;
}

std::vector<Wall> default_walls(const std::vector<std::string>& variables) {
  const int k = (int)variables.size();
  std::vector<Wall> walls;
  auto names_of = [&](unsigned mask) {
    std::vector<std::string> out;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) out.push_back(variables[(std::size_t)i]);
    return out;
  };
  for (unsigned a = 1; a < (1u << k); ++a)
    for (unsigned b = a + 1; b < (1u << k); ++b) {
      if (a & b) continue;
      // a < b already makes each unordered pair appear once.
      walls.push_back({names_of(a), names_of(b)});
    }
  return walls;
}

const BigInt& GridSample::count() const {
  if (lattice) return *lattice;
  if (subfloor) return *subfloor;
  throw Error(Errc::Internal, "sample carries no value");
}

std::vector<GridSample> evaluate_grid(const ProfileTemplate& tmpl, const VarRanges& ranges,
                                      Int genus, CountMethod method,
                                      const CountOptions& options) {
  std::vector<std::string> vars = tmpl.variables();
  for (const auto& v : vars)
    if (!ranges.count(v))
      throw Error(Errc::InvalidInput, "no range for template variable '" + v + "'");
  if ((method == CountMethod::Subfloor || method == CountMethod::Both) && genus != 0)
    throw Error(Errc::UnsupportedProfile, "subfloor counting requires genus 0");

  std::vector<GridSample> samples;
  std::map<std::string, Int> assignment;
  std::function<void(std::size_t)> walk = [&](std::size_t vi) {
    if (vi == vars.size()) {
      TangencyProfile profile = tmpl.instantiate(assignment);
      GridSample s;
      s.assignment = assignment;
      if (method != CountMethod::Subfloor)
        s.lattice = n_trop_p1p1(profile, genus, options);
      if (method != CountMethod::Lattice) s.subfloor = n_floor(profile);
      s.agree = !s.lattice || !s.subfloor || *s.lattice == *s.subfloor;
      samples.push_back(std::move(s));
      return;
    }
    auto [lo, hi] = ranges.at(vars[vi]);
    for (Int v = lo; v <= hi; ++v) {
      assignment[vars[vi]] = v;
      walk(vi + 1);
    }
    assignment.erase(vars[vi]);
  };
  walk(0);
  return samples;
}

std::vector<int> chamber_of(const std::map<std::string, Int>& assignment,
                            const std::vector<Wall>& walls) {
  std::vector<int> signature;
  signature.reserve(walls.size());
  for (const auto& wall : walls) {
    Int diff = 0;
    for (const auto& v : wall.lhs) diff += assignment.at(v);
    for (const auto& v : wall.rhs) diff -= assignment.at(v);
    if (diff == 0) throw Error(Errc::OnWall, "assignment lies on a wall");
    signature.push_back(diff > 0 ? 1 : -1);
  }
  return signature;
}

mpq_class Polynomial::evaluate(const std::map<std::string, Int>& assignment) const {
  mpq_class total = 0;
  for (const auto& [mono, coeff] : coefficients) {
    mpz_class term = 1;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      mpz_class base = to_big(assignment.at(variables[i]));
      mpz_class powed;
      mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), (unsigned long)mono[i]);
      term *= powed;
    }
    total += coeff * mpq_class(term);
  }
  return total;
}

namespace {

// Graded-lex descending: higher total degree first, then lexicographically
// larger exponent vector first.
bool monomial_before(const Monomial& a, const Monomial& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  return a > b;
}

std::string coeff_string(const mpq_class& q) {
  std::ostringstream out;
  out << q.get_num();
  if (q.get_den() != 1) out << "/" << q.get_den();
  return out.str();
}

}  // namespace

std::string Polynomial::to_string() const {
  std::vector<std::pair<Monomial, mpq_class>> entries(coefficients.begin(), coefficients.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return monomial_before(a.first, b.first); });
  std::string out;
  for (const auto& [mono, coeff] : entries) {
    mpq_class abs_coeff = abs(coeff);
    if (out.empty())
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    std::string vars_part;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!vars_part.empty()) vars_part += "*";
      vars_part += variables[i];
      if (mono[i] > 1) vars_part += "^" + std::to_string(mono[i]);
    }
    if (vars_part.empty())
      out += coeff_string(abs_coeff);
    else if (abs_coeff == 1)
      out += vars_part;
    else
      out += coeff_string(abs_coeff) + "*" + vars_part;
  }
  return out.empty() ? "0" : out;
}

Polynomial fit_polynomial(const std::vector<GridSample>& samples,
                          const std::vector<std::string>& variables, int degree_bound) {
  if (degree_bound < 0) throw Error(Errc::InvalidInput, "degree bound must be nonnegative");
  const std::size_t k = variables.size();

  // All monomials with every exponent at most degree_bound.
  std::vector<Monomial> monomials;
  Monomial current(k, 0);
  std::function<void(std::size_t)> gen = [&](std::size_t vi) {
    if (vi == k) {
      monomials.push_back(current);
      return;
    }
    for (int e = 0; e <= degree_bound; ++e) {
      current[vi] = e;
      gen(vi + 1);
    }
    current[vi] = 0;
  };
  gen(0);

  if (samples.size() < monomials.size())
    throw Error(Errc::InsufficientSamples,
                "need at least " + std::to_string(monomials.size()) + " samples, have " +
                    std::to_string(samples.size()));

  // Row-reduce the full overdetermined Vandermonde system exactly.
  const std::size_t rows = samples.size(), cols = monomials.size();
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_class term = 1;
      for (std::size_t i = 0; i < k; ++i) {
        mpz_class base = to_big(samples[r].assignment.at(variables[i]));
        mpz_class powed;
        mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), (unsigned long)monomials[c][i]);
        term *= powed;
      }
      m[r][c] = mpq_class(term);
    }
    m[r][cols] = mpq_class(samples[r].count());
  }

  std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = SIZE_MAX;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == SIZE_MAX) continue;
    std::swap(m[rank], m[pivot]);
    mpq_class inv = m[rank][c];
    for (std::size_t c2 = c; c2 <= cols; ++c2) m[rank][c2] /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class factor = m[r][c];
      for (std::size_t c2 = c; c2 <= cols; ++c2) m[r][c2] -= factor * m[rank][c2];
    }
    pivot_of_col[c] = rank++;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0)
      throw Error(Errc::FitFailed, "samples are not reproduced by any polynomial "
                                   "within the degree bound");

  Polynomial poly;
  poly.variables = variables;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] == SIZE_MAX) continue;  // free variable: coefficient 0
    const mpq_class& value = m[pivot_of_col[c]][cols];
    if (value != 0) poly.coefficients[monomials[c]] = value;
  }

  // Exact verification of every sample (holdout check with zero tolerance).
  for (const auto& s : samples)
    if (poly.evaluate(s.assignment) != mpq_class(s.count()))
      throw Error(Errc::FitFailed, "fitted polynomial fails an exact holdout check");
  return poly;
}

ScanReport verify_chambers(const ProfileTemplate& tmpl, const std::vector<Wall>& walls,
                           const VarRanges& ranges, int degree_bound, Int genus,
                           CountMethod method, const CountOptions& options) {
  ScanReport report;
  report.variables = tmpl.variables();
  report.walls = walls;
  report.samples = evaluate_grid(tmpl, ranges, genus, method, options);
  for (const auto& s : report.samples) report.methods_agree &= s.agree;

  std::map<std::vector<int>, std::vector<GridSample>> by_chamber;
  for (const auto& s : report.samples) {
    try {
      by_chamber[chamber_of(s.assignment, walls)].push_back(s);
    } catch (const Error& e) {
      if (e.code() != Errc::OnWall) throw;  // on-wall samples feed only the global fit
    }
  }

  for (const auto& [signature, chamber_samples] : by_chamber) {
    ChamberFit fit;
    fit.signature = signature;
    fit.sample_count = chamber_samples.size();
    try {
      fit.polynomial = fit_polynomial(chamber_samples, report.variables, degree_bound);
      fit.status = "ok";
    } catch (const Error& e) {
      if (e.code() == Errc::InsufficientSamples)
        fit.status = "insufficient-samples";
      else if (e.code() == Errc::FitFailed)
        fit.status = "fit-failed";
      else
        throw;
    }
    report.chambers.push_back(std::move(fit));
  }

  try {
    report.global = fit_polynomial(report.samples, report.variables, degree_bound);
  } catch (const Error& e) {
    if (e.code() != Errc::InsufficientSamples && e.code() != Errc::FitFailed) throw;
  }
  return report;
}

}  // namespace tropc
