#include "regpow/feasibility.hpp"

#include <sstream>

#include "regpow/error.hpp"

namespace regpow {

RationalVector::RationalVector(std::vector<mpq_class> entries) : entries_(std::move(entries)) {
  for (auto& q : entries_) q.canonicalize();
}

std::string RationalVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].get_str();
  }
  os << ']';
  return os.str();
}

std::optional<RationalVector> solve_nonnegative(const std::vector<std::vector<mpq_class>>& A,
                                                const std::vector<mpq_class>& b) {
  const std::size_t rows = A.size();
  if (b.size() != rows) throw DomainError("right-hand side length does not match the row count");
  const std::size_t cols = rows == 0 ? 0 : A.front().size();
  for (const auto& row : A)
    if (row.size() != cols) throw DomainError("ragged constraint matrix");

  // Tableau columns: original variables, one artificial per row, rhs.
  const std::size_t total = cols + rows;
  std::vector<std::vector<mpq_class>> T(rows, std::vector<mpq_class>(total + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < cols; ++j) T[i][j] = flip ? mpq_class(-A[i][j]) : A[i][j];
    T[i][cols + i] = 1;
    T[i][total] = flip ? mpq_class(-b[i]) : b[i];
    basis[i] = cols + i;
  }

  // Phase one: minimize the sum of artificials. Reduced cost of column j is
  // c_j - sum_i c_basis(i) T[i][j] with c = 1 on artificials.
  auto cost = [&](std::size_t j) { return j >= cols && j < total ? 1 : 0; };
  while (true) {
    std::size_t entering = total;
    for (std::size_t j = 0; j < total && entering == total; ++j) {
      mpq_class reduced = cost(j);
      for (std::size_t i = 0; i < rows; ++i)
        if (cost(basis[i])) reduced -= T[i][j];
      if (sgn(reduced) < 0) entering = j;
    }
    if (entering == total) break;

    std::size_t leaving = rows;
    mpq_class best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(T[i][entering]) <= 0) continue;
      mpq_class ratio = T[i][total] / T[i][entering];
      if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    // Phase-one objective is bounded below by zero, so a pivot row exists.
    if (leaving == rows) throw Error("simplex: unbounded phase-one direction");

    const mpq_class pivot = T[leaving][entering];
    for (auto& v : T[leaving]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leaving || sgn(T[i][entering]) == 0) continue;
      const mpq_class factor = T[i][entering];
      for (std::size_t j = 0; j <= total; ++j) T[i][j] -= factor * T[leaving][j];
    }
    basis[leaving] = entering;
  }

  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] >= cols && sgn(T[i][total]) != 0) return std::nullopt;

  std::vector<mpq_class> x(cols);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = T[i][total];
  return RationalVector(std::move(x));
}

std::optional<RationalVector> newton_weights(const Monomial& target, std::span<const Monomial> generators,
                                             unsigned p) {
  const std::size_t n = target.nvars();
  const std::size_t k = generators.size();
  for (const auto& g : generators) require_same_ambient(g, target);
  if (k == 0) return std::nullopt;

  // Unknowns: k weights followed by n slacks.
  std::vector<std::vector<mpq_class>> A(n + 1, std::vector<mpq_class>(k + n));
  std::vector<mpq_class> b(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t g = 0; g < k; ++g) A[j][g] = generators[g][j];
    A[j][k + j] = 1;
    b[j] = target[j];
  }
  for (std::size_t g = 0; g < k; ++g) A[n][g] = 1;
  b[n] = p;

  auto solution = solve_nonnegative(A, b);
  if (!solution) return std::nullopt;
  std::vector<mpq_class> weights((*solution).entries().begin(), (*solution).entries().begin() + k);

  // Re-verify the certificate exactly.
  mpq_class total = 0;
  for (const auto& w : weights) {
    if (sgn(w) < 0) throw Error("simplex produced a negative weight");
    total += w;
  }
  if (total != p) throw Error("simplex weights do not sum to p");
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class coord = 0;
    for (std::size_t g = 0; g < k; ++g) coord += weights[g] * generators[g][j];
    if (coord > target[j]) throw Error("simplex certificate exceeds the target exponent");
  }
  return RationalVector(std::move(weights));
}

}  // namespace regpow
