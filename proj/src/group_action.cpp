#include "folidx/group_action.hpp"

#include <cmath>
#include <sstream>

namespace folidx {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ValidationError("matrix rows must form a square matrix");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw ValidationError("matrix size mismatch in product");
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      long long aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::pow(long long e) const {
  IntMatrix result = identity(n_);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

long long IntMatrix::trace() const {
  long long t = 0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

long long IntMatrix::det() const {
  if (n_ == 0) return 1;
  IntMatrix m = *this;
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k + 1 < n_; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n_; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n_ - 1, n_ - 1);
}

std::vector<std::vector<long long>> IntMatrix::rows() const {
  std::vector<std::vector<long long>> r(n_, std::vector<long long>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i][j] = at(i, j);
  return r;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IntMatrix submatrix(const IntMatrix& a, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  IntMatrix m(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = a.at(rows[i], cols[j]);
  return m;
}

}  // namespace

IntMatrix exterior_power(const IntMatrix& a, int k) {
  int n = a.size();
  if (k < 0 || k > n) throw ValidationError("exterior power degree out of range");
  auto subs = subsets_lex(n, k);
  int d = static_cast<int>(subs.size());
  IntMatrix r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r.at(i, j) = submatrix(a, subs[i], subs[j]).det();
  return r;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  int na = a.size(), nb = b.size();
  IntMatrix r(na * nb);
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < na; ++j1) {
      long long v = a.at(i1, j1);
      if (v == 0) continue;
      for (int i2 = 0; i2 < nb; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          r.at(i1 * nb + i2, j1 * nb + j2) = v * b.at(i2, j2);
    }
  return r;
}

Character Character::rho(FiniteCyclicGroup g, long long j) {
  if (g.order < 1) throw ValidationError("cyclic group order must be >= 1");
  return Character(g, ((j % g.order) + g.order) % g.order);
}

Character Character::sign(FiniteCyclicGroup g) {
  if (g.order % 2 != 0)
    throw ValidationError("sign character needs even group order, got " +
                          std::to_string(g.order));
  return Character(g, g.order / 2);
}

std::complex<double> Character::value(long long t) const {
  long long e = ((index_ * t) % group_.order + group_.order) % group_.order;
  double angle = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(group_.order);
  return std::polar(1.0, angle);
}

void validate_action(const GradedAction& action) {
  if (action.group.order < 1) throw ValidationError("cyclic group order must be >= 1");
  if (action.degrees.size() != action.generator.size())
    throw ValidationError("graded action needs one generator matrix per degree");
  for (size_t k = 0; k < action.degrees.size(); ++k) {
    const IntMatrix& m = action.generator[k];
    if (m.size() != action.degrees[k])
      throw ValidationError("generator matrix in degree " + std::to_string(k) +
                            " is not " + std::to_string(action.degrees[k]) + " square");
    if (m.pow(action.group.order) != IntMatrix::identity(m.size()))
      throw RelationViolation("generator matrix " + m.str() + " in degree " +
                              std::to_string(k) + " does not satisfy g^" +
                              std::to_string(action.group.order) + " = identity");
  }
}

namespace {

constexpr double kIntegralityTolerance = 1e-9;

std::vector<IntMatrix> generator_powers(const GradedAction& action, int degree) {
  std::vector<IntMatrix> powers;
  powers.reserve(action.group.order);
  IntMatrix cur = IntMatrix::identity(action.generator[degree].size());
  for (long long t = 0; t < action.group.order; ++t) {
    powers.push_back(cur);
    cur = cur * action.generator[degree];
  }
  return powers;
}

void check_degree(const GradedAction& action, int degree) {
  if (degree < 0 || degree >= static_cast<int>(action.degrees.size()))
    throw ValidationError("degree " + std::to_string(degree) + " out of range");
}

}  // namespace

long long isotypic_multiplicity(const GradedAction& action, int degree, const Character& chi) {
  check_degree(action, degree);
  if (chi.group().order != action.group.order)
    throw ValidationError("character group does not match action group");
  std::complex<double> avg(0.0, 0.0);
  IntMatrix cur = IntMatrix::identity(action.generator[degree].size());
  for (long long t = 0; t < action.group.order; ++t) {
    avg += std::conj(chi.value(t)) * static_cast<double>(cur.trace());
    cur = cur * action.generator[degree];
  }
  avg /= static_cast<double>(action.group.order);
  double rounded = std::round(avg.real());
  if (std::abs(avg.real() - rounded) > kIntegralityTolerance ||
      std::abs(avg.imag()) > kIntegralityTolerance || rounded < 0.0)
    throw NonIntegralMultiplicity("character average " + std::to_string(avg.real()) + "+" +
                                  std::to_string(avg.imag()) + "i in degree " +
                                  std::to_string(degree) + " is not a nonnegative integer");
  return static_cast<long long>(rounded);
}

std::vector<long long> invariant_betti(const GradedAction& action) {
  std::vector<long long> betti(action.degrees.size());
  for (size_t k = 0; k < action.degrees.size(); ++k)
    betti[k] = isotypic_multiplicity(action, static_cast<int>(k),
                                     Character::trivial(action.group));
  return betti;
}

std::vector<double> averaging_projector(const GradedAction& action, int degree) {
  check_degree(action, degree);
  int n = action.generator[degree].size();
  std::vector<double> p(static_cast<size_t>(n) * n, 0.0);
  auto powers = generator_powers(action, degree);
  for (const IntMatrix& g : powers)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        p[static_cast<size_t>(i) * n + j] += static_cast<double>(g.at(i, j));
  for (double& v : p) v /= static_cast<double>(action.group.order);
  return p;
}

GradedAction exterior_power_action(const IntMatrix& matrix_on_h1, int top_degree,
                                   FiniteCyclicGroup group) {
  if (matrix_on_h1.size() != top_degree)
    throw ValidationError("top degree must equal the size of the degree-one matrix");
  GradedAction action;
  action.group = group;
  for (int k = 0; k <= top_degree; ++k) {
    IntMatrix m = exterior_power(matrix_on_h1, k);
    action.degrees.push_back(m.size());
    action.generator.push_back(m);
  }
  return action;
}

}  // namespace folidx
