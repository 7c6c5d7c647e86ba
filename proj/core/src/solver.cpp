#include "vball/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace vball {

namespace {

// One inequality sum(coeffs . x) <= bound over the free variables.
struct Ineq {
  std::vector<Rational> coeffs;
  Rational bound;

  bool operator<(const Ineq& other) const {
    if (bound != other.bound) return bound < other.bound;
    return std::lexicographical_compare(coeffs.begin(), coeffs.end(), other.coeffs.begin(),
                                        other.coeffs.end());
  }
  bool operator==(const Ineq&) const = default;
};

// Scale so the leading nonzero coefficient has absolute value 1; keeps
// the constraint set small across Fourier-Motzkin stages.
void normalize(Ineq& q) {
  for (const Rational& c : q.coeffs) {
    if (c != 0) {
      const Rational scale = 1 / abs(c);
      for (Rational& v : q.coeffs) v *= scale;
      q.bound *= scale;
      return;
    }
  }
}

void dedupe(std::vector<Ineq>& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

}  // namespace

std::optional<std::vector<Rational>> solve_box_system(const BoxSystem& sys) {
  const std::size_t n = sys.vars;
  if (sys.lower.size() != n || sys.upper.size() != n ||
      sys.eq_rows.size() != sys.eq_rhs.size()) {
    throw std::invalid_argument("box system dimensions are inconsistent");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sys.lower[i] > sys.upper[i]) return std::nullopt;
  }

  std::vector<std::vector<Rational>> rows = sys.eq_rows;
  std::vector<Rational> rhs = sys.eq_rhs;
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("box system row width mismatch");
  }

  // Reduced row echelon form; pivot_of[c] is the row owning column c.
  std::vector<std::optional<std::size_t>> pivot_of(n);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(rhs[rank], rhs[pivot]);
    const Rational inv = 1 / Rational(rows[rank][col]);
    for (Rational& v : rows[rank]) v *= inv;
    rhs[rank] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
      rhs[r] -= factor * rhs[rank];
    }
    pivot_of[col] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rhs[r] != 0) return std::nullopt;
  }

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!pivot_of[c]) free_cols.push_back(c);
  }
  const std::size_t f = free_cols.size();

  // Pivot variable value is rhs of its row minus the free-column part;
  // both its box bounds become inequalities over the free variables.
  std::vector<Ineq> constraints;
  for (std::size_t c = 0; c < n; ++c) {
    if (!pivot_of[c]) continue;
    const std::size_t r = *pivot_of[c];
    Ineq up;  // sum(a . x_free) <= rhs - lower  (from lower bound)
    up.coeffs.resize(f);
    bool any = false;
    for (std::size_t j = 0; j < f; ++j) {
      up.coeffs[j] = rows[r][free_cols[j]];
      if (up.coeffs[j] != 0) any = true;
    }
    Ineq down = up;
    for (Rational& v : down.coeffs) v = -v;
    up.bound = rhs[r] - sys.lower[c];
    down.bound = sys.upper[c] - rhs[r];
    if (!any) {
      if (up.bound < 0 || down.bound < 0) return std::nullopt;
      continue;
    }
    normalize(up);
    normalize(down);
    constraints.push_back(std::move(up));
    constraints.push_back(std::move(down));
  }
  for (std::size_t j = 0; j < f; ++j) {
    Ineq up;
    up.coeffs.assign(f, Rational(0));
    up.coeffs[j] = 1;
    up.bound = sys.upper[free_cols[j]];
    Ineq down;
    down.coeffs.assign(f, Rational(0));
    down.coeffs[j] = -1;
    down.bound = -sys.lower[free_cols[j]];
    constraints.push_back(std::move(up));
    constraints.push_back(std::move(down));
  }

  // stages[j] holds the constraints alive before eliminating free
  // variable j; variables are eliminated from the back.
  std::vector<std::vector<Ineq>> stages(f);
  std::vector<Ineq> current = std::move(constraints);
  dedupe(current);
  for (std::size_t j = f; j-- > 0;) {
    stages[j] = current;
    std::vector<Ineq> next;
    std::vector<const Ineq*> pos;
    std::vector<const Ineq*> neg;
    for (const Ineq& q : stages[j]) {
      const Rational& a = q.coeffs[j];
      if (a > 0) {
        pos.push_back(&q);
      } else if (a < 0) {
        neg.push_back(&q);
      } else {
        next.push_back(q);
      }
    }
    for (const Ineq* u : pos) {
      for (const Ineq* l : neg) {
        Ineq combined;
        combined.coeffs.resize(f, Rational(0));
        const Rational cu = -l->coeffs[j];  // positive
        const Rational cl = u->coeffs[j];   // positive
        bool any = false;
        for (std::size_t c = 0; c < f; ++c) {
          combined.coeffs[c] = cu * u->coeffs[c] + cl * l->coeffs[c];
          if (c != j && combined.coeffs[c] != 0) any = true;
        }
        combined.bound = cu * u->bound + cl * l->bound;
        if (!any) {
          if (combined.bound < 0) return std::nullopt;
          continue;
        }
        normalize(combined);
        next.push_back(std::move(combined));
      }
    }
    dedupe(next);
    current = std::move(next);
  }
  for (const Ineq& q : current) {
    if (q.bound < 0) return std::nullopt;
  }

  // Back-substitute in ascending order; each stage pins one interval.
  std::vector<Rational> free_vals(f);
  for (std::size_t j = 0; j < f; ++j) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const Ineq& q : stages[j]) {
      const Rational& a = q.coeffs[j];
      if (a == 0) continue;
      Rational rest = q.bound;
      for (std::size_t c = 0; c < j; ++c) rest -= q.coeffs[c] * free_vals[c];
      const Rational limit = rest / a;
      if (a > 0) {
        if (!hi || limit < *hi) hi = limit;
      } else {
        if (!lo || limit > *lo) lo = limit;
      }
    }
    if (lo && hi && *lo > *hi) {
      throw std::logic_error("interval inversion after feasible elimination");
    }
    Rational pick(0);
    if (lo && *lo > 0) {
      pick = *lo;
    } else if (hi && *hi < 0) {
      pick = *hi;
    }
    free_vals[j] = pick;
  }

  std::vector<Rational> solution(n);
  for (std::size_t j = 0; j < f; ++j) solution[free_cols[j]] = free_vals[j];
  for (std::size_t c = 0; c < n; ++c) {
    if (!pivot_of[c]) continue;
    const std::size_t r = *pivot_of[c];
    Rational value = rhs[r];
    for (std::size_t j = 0; j < f; ++j) value -= rows[r][free_cols[j]] * free_vals[j];
    solution[c] = value;
  }

  for (std::size_t c = 0; c < n; ++c) {
    if (solution[c] < sys.lower[c] || solution[c] > sys.upper[c]) {
      throw std::logic_error("solver produced an out-of-box witness");
    }
  }
  for (std::size_t r = 0; r < sys.eq_rows.size(); ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < n; ++c) acc += sys.eq_rows[r][c] * solution[c];
    if (acc != sys.eq_rhs[r]) {
      throw std::logic_error("solver witness violates an equality row");
    }
  }
  return solution;
}

}  // namespace vball
