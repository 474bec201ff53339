#include "qrbf/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qrbf/errors.hpp"
#include "qrbf/properties.hpp"

namespace qrbf {
namespace {

struct Echelon {
  std::vector<Point> rows;
  std::vector<int> pivots;
};

/// Reduced row echelon form; pivot i is the lowest set bit of rows[i].
Echelon reduce(std::vector<Point> rows) {
  Echelon e;
  for (Point row : rows) {
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if ((row >> e.pivots[i]) & 1) row ^= e.rows[i];
    if (row == 0) continue;
    const int pivot = std::countr_zero(row);
    for (auto& other : e.rows)
      if ((other >> pivot) & 1) other ^= row;
    e.rows.push_back(row);
    e.pivots.push_back(pivot);
  }
  return e;
}

/// Lowest-weight nonzero codeword, first found along the Gray-code walk.
Point min_weight_codeword(const LinearCode& code) {
  if (code.k() < 1) throw std::invalid_argument("code has no nonzero codewords");
  if (code.k() > kMaxEnumeratedDimension)
    throw BudgetExceeded("codeword enumeration", std::uint64_t{1} << std::min(code.k(), 62),
                         std::uint64_t{1} << kMaxEnumeratedDimension);
  const auto basis = code.generator_basis();
  Point word = 0, best = 0;
  int best_weight = code.n() + 1;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
    word ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    if (weight(word) < best_weight) {
      best_weight = weight(word);
      best = word;
    }
  }
  return best;
}

}  // namespace

int rank(std::vector<Point> rows) { return static_cast<int>(reduce(std::move(rows)).rows.size()); }

LinearCode::LinearCode(int n, std::vector<Point> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > 62) throw std::invalid_argument("code length out of range");
  for (Point r : rows_)
    if (r & ~low_mask(n)) throw std::invalid_argument("parity-check row wider than n");
  if (rank(rows_) != static_cast<int>(rows_.size()))
    throw std::invalid_argument("parity-check rows are linearly dependent");
}

Point LinearCode::syndrome(Point x) const noexcept {
  Point s = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) s |= static_cast<Point>(dot(rows_[i], x)) << i;
  return s;
}

std::vector<Point> LinearCode::generator_basis() const {
  const Echelon e = reduce(rows_);
  Point pivot_mask = 0;
  for (int p : e.pivots) pivot_mask |= Point{1} << p;
  std::vector<Point> basis;
  for (int c = 0; c < n_; ++c) {
    if ((pivot_mask >> c) & 1) continue;
    Point v = Point{1} << c;
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if ((e.rows[i] >> c) & 1) v |= Point{1} << e.pivots[i];
    basis.push_back(v);
  }
  return basis;
}

LinearCode LinearCode::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  int n = -1, k = -1;
  std::vector<Point> rows;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (n < 0) {
      std::string second, extra;
      if (first.rfind("n=", 0) != 0 || !(tokens >> second) || second.rfind("k=", 0) != 0 || (tokens >> extra))
        throw ParseError(number, "expected header 'n=<int> k=<int>'");
      try {
        std::size_t used = 0;
        n = std::stoi(first.substr(2), &used);
        if (used != first.size() - 2) throw std::invalid_argument("n");
        k = std::stoi(second.substr(2), &used);
        if (used != second.size() - 2) throw std::invalid_argument("k");
      } catch (const std::logic_error&) {
        throw ParseError(number, "malformed header integers");
      }
      if (n < 0 || n > 62 || k < 0 || k > n) throw ParseError(number, "header requires 0 <= k <= n <= 62");
      continue;
    }
    std::string extra;
    if (tokens >> extra) throw ParseError(number, "expected one binary row");
    if (static_cast<int>(first.size()) != n) throw ParseError(number, "row width must be n");
    Point row = 0;
    for (int j = 0; j < n; ++j) {
      if (first[j] != '0' && first[j] != '1') throw ParseError(number, "row must be binary");
      if (first[j] == '1') row |= Point{1} << j;
    }
    rows.push_back(row);
  }
  if (n < 0) throw ParseError(number, "missing header");
  if (static_cast<int>(rows.size()) != n - k) throw ParseError(number, "expected n-k parity-check rows");
  try {
    return LinearCode(n, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(number, e.what());
  }
}

std::string LinearCode::to_text() const {
  std::ostringstream os;
  os << "n=" << n_ << " k=" << k() << '\n';
  for (Point row : rows_) {
    for (int j = 0; j < n_; ++j) os << ((row >> j) & 1);
    os << '\n';
  }
  return os.str();
}

LinearCode hamming_parity_check(int r) {
  if (r < 2 || r > 5) throw std::invalid_argument("Hamming redundancy must be in [2, 5]");
  const int n = (1 << r) - 1;
  std::vector<Point> rows(static_cast<std::size_t>(r), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < r; ++i)
      if (((j + 1) >> i) & 1) rows[static_cast<std::size_t>(i)] |= Point{1} << j;
  return LinearCode(n, std::move(rows));
}

LinearCode extended_hamming(int r) {
  const LinearCode base = hamming_parity_check(r);
  std::vector<Point> rows = base.rows();
  rows.push_back(low_mask(base.n() + 1));
  return LinearCode(base.n() + 1, std::move(rows));
}

LinearCode example_hamming_matrix() {
  const char* printed[] = {"01111000", "10110100", "11010010", "11100001"};
  std::vector<Point> rows;
  for (const char* s : printed) {
    Point row = 0;
    for (int j = 0; j < 8; ++j)
      if (s[j] == '1') row |= Point{1} << j;
    rows.push_back(row);
  }
  return LinearCode(8, std::move(rows));
}

LinearCode identity_code(int n) {
  std::vector<Point> rows;
  for (int i = 0; i < n; ++i) rows.push_back(Point{1} << i);
  return LinearCode(n, std::move(rows));
}

LinearCode full_space_code(int n) { return LinearCode(n, {}); }

int min_kernel_weight(const LinearCode& code) { return weight(min_weight_codeword(code)); }

BooleanFunction inner_product(int m) {
  if (m < 1 || 2 * m > BooleanFunction::kMaxDimension) throw std::invalid_argument("inner product half-dimension out of range");
  const Point low = low_mask(m);
  return BooleanFunction::tabulate(2 * m, [&](Point z) { return character_sign(z & low, z >> m); });
}

BentCertificate is_bent(const BooleanFunction& f) {
  BentCertificate c;
  c.n = f.n();
  const Spectrum s = walsh_transform(f);
  const double flat = std::sqrt(std::ldexp(1.0, f.n()));
  const std::int64_t square = std::int64_t{1} << f.n();
  c.ok = f.n() % 2 == 0;
  c.worst_deviation = -1;
  for (Point g = 0; g < f.size(); ++g) {
    const std::int64_t w = s.W[g];
    if (w * w != square) c.ok = false;
    const double dev = std::abs(std::abs(static_cast<double>(w)) - flat);
    if (dev > c.worst_deviation) {
      c.worst_deviation = dev;
      c.worst_gamma = g;
    }
  }
  c.worst_deviation /= std::ldexp(1.0, f.n());
  return c;
}

BooleanFunction compose(const BooleanFunction& g, const LinearCode& code) {
  if (g.n() != code.redundancy())
    throw std::invalid_argument("inner function must have as many inputs as the code has parity checks");
  if (code.n() > BooleanFunction::kMaxDimension) throw std::invalid_argument("composed dimension too large");
  return BooleanFunction::tabulate(code.n(), [&](Point x) { return g.sign(code.syndrome(x)); });
}

TowerVerdict verify_tower(const BooleanFunction& g, const LinearCode& code) {
  const BooleanFunction f = compose(g, code);
  const Analysis a(f);
  TowerVerdict v;
  v.n = code.n();
  v.k = code.k();

  Point shortest = 0;
  if (v.k == 0) {
    v.d_star = v.n;
  } else {
    shortest = min_weight_codeword(code);
    v.d_star = weight(shortest) - 1;
  }

  if (v.d_star >= 1) {
    const PropertyReport inf = inf_error(a, v.d_star);
    v.inf_error = std::get<Rational>(inf.epsilon);
    v.inf_witness = inf.witness.gamma;
  }
  v.inf_zero = v.inf_error == Rational(0);

  v.separation_applicable = v.k > 0;
  if (v.separation_applicable) {
    v.separation_witness = shortest;
    v.separation_influence = influence(f, shortest);
    v.separation_found = v.separation_influence == Rational(0);
  }

  v.mean = a.spectrum.coefficient(0);
  // fhat(0)^2 = W0^2 / 2^(2n) should equal 2^-(n-k).
  const __int128 w0 = a.spectrum.W[0];
  v.mean_matches = (w0 * w0) << (v.n - v.k) == static_cast<__int128>(1) << (2 * v.n);
  v.mean_zero_ok = a.mean_zero_ok();
  v.mean_bounded = 2 * std::abs(a.spectrum.W[0]) <= (std::int64_t{1} << v.n);

  if (!v.inf_zero)
    v.failure = "influence deviation " + v.inf_error.to_string() + " at gamma " + std::to_string(v.inf_witness);
  else if (v.separation_applicable && !v.separation_found)
    v.failure = "no zero-influence direction at weight " + std::to_string(v.d_star + 1);
  else if (!v.mean_matches)
    v.failure = "mean " + v.mean.to_string() + " does not have squared magnitude 2^-(n-k)";
  else if (!v.mean_bounded)
    v.failure = "mean " + v.mean.to_string() + " exceeds 1/2 in magnitude";
  return v;
}

}  // namespace qrbf
