#include "qrbf/core.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace qrbf {
namespace {

void check_dimension(int n) {
  if (n < 0 || n > BooleanFunction::kMaxDimension)
    throw std::invalid_argument("dimension " + std::to_string(n) + " outside [0, " +
                                std::to_string(BooleanFunction::kMaxDimension) + "]");
}

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_dimension(n);
  words_.assign(((Point{1} << n) + 63) / 64, 0);
}

BooleanFunction BooleanFunction::from_signs(int n, std::span<const int> signs) {
  BooleanFunction f(n);
  if (signs.size() != f.size())
    throw std::invalid_argument("expected " + std::to_string(f.size()) + " signs, got " +
                                std::to_string(signs.size()));
  for (Point x = 0; x < f.size(); ++x) f.set(x, signs[x]);
  return f;
}

BooleanFunction BooleanFunction::constant(int n, int sign) {
  return tabulate(n, [sign](Point) { return sign; });
}

BooleanFunction BooleanFunction::character(int n, Point gamma) {
  if (gamma >> n) throw std::invalid_argument("character index outside F_2^n");
  return tabulate(n, [gamma](Point x) { return character_sign(gamma, x); });
}

int BooleanFunction::evaluate(Point x) const {
  if (x >= size())
    throw std::out_of_range("point " + std::to_string(x) + " outside F_2^" + std::to_string(n_));
  return sign(x);
}

void BooleanFunction::set(Point x, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("boolean function values must be +1 or -1");
  if (x >= size()) throw std::out_of_range("point outside domain");
  const std::uint64_t m = std::uint64_t{1} << (x & 63);
  if (sign == -1)
    words_[x >> 6] |= m;
  else
    words_[x >> 6] &= ~m;
}

std::uint64_t BooleanFunction::count_negative() const noexcept {
  std::uint64_t c = 0;
  for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::vector<int> BooleanFunction::signs() const {
  std::vector<int> out(size());
  for (Point x = 0; x < size(); ++x) out[x] = sign(x);
  return out;
}

Subcube::Subcube(int n, Point free_mask, Point fixed) : n_(n), free_(free_mask), fixed_(fixed) {
  if (n < 0 || n > 63) throw std::invalid_argument("subcube dimension out of range");
  if ((free_mask | fixed) & ~low_mask(n)) throw std::invalid_argument("subcube mask outside [n]");
  if (free_mask & fixed) throw std::invalid_argument("subcube assignment overlaps free coordinates");
}

void fwht(std::span<std::int64_t> data) {
  const std::size_t len = data.size();
  if (!std::has_single_bit(len)) throw std::invalid_argument("transform length must be a power of two");
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = data[j];
        const std::int64_t b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

int evaluate(const BooleanFunction& f, Point x) { return f.evaluate(x); }

Spectrum walsh_transform(const BooleanFunction& f) {
  Spectrum s{f.n(), std::vector<std::int64_t>(f.size())};
  for (Point x = 0; x < f.size(); ++x) s.W[x] = f.sign(x);
  fwht(s.W);
  return s;
}

AutocorrelationTable autocorrelation(const Spectrum& spectrum) {
  // Butterfly partial sums are bounded by sum W^2 = 2^(2n) <= 2^60.
  AutocorrelationTable t{spectrum.n, std::vector<std::int64_t>(spectrum.W.size())};
  for (std::size_t g = 0; g < t.A.size(); ++g) t.A[g] = spectrum.W[g] * spectrum.W[g];
  fwht(t.A);
  for (auto& a : t.A) a >>= spectrum.n;
  return t;
}

AutocorrelationTable autocorrelation(const BooleanFunction& f) {
  return autocorrelation(walsh_transform(f));
}

std::int64_t autocorrelation_at(const BooleanFunction& f, Point gamma) {
  if (gamma >= f.size()) throw std::out_of_range("shift outside F_2^n");
  std::int64_t disagree = 0;
  for (Point x = 0; x < f.size(); ++x) disagree += f.bit(x) ^ f.bit(x ^ gamma);
  return static_cast<std::int64_t>(f.size()) - 2 * disagree;
}

Rational influence(const BooleanFunction& f, Point gamma) {
  const std::int64_t a = autocorrelation_at(f, gamma);
  return Rational::dyadic(static_cast<std::int64_t>(f.size()) - a, f.n() + 1);
}

Rational influence(const AutocorrelationTable& table, Point gamma) {
  return Rational::dyadic((std::int64_t{1} << table.n) - table.A.at(gamma), table.n + 1);
}

BooleanFunction restrict(const BooleanFunction& f, const Subcube& cube) {
  if (cube.n() != f.n()) throw std::invalid_argument("subcube dimension does not match function");
  return BooleanFunction::tabulate(cube.dimension(), [&](Point x) { return f.sign(cube.embed(x)); });
}

Rational spectral_mass(const Spectrum& spectrum, const Subcube& cube) {
  if (cube.n() != spectrum.n) throw std::invalid_argument("subcube dimension does not match spectrum");
  std::int64_t total = 0;
  for_each_submask(cube.free_mask(), [&](Point s) {
    const std::int64_t w = spectrum.W[s | cube.fixed()];
    total += w * w;
  });
  return Rational::dyadic(total, 2 * spectrum.n);
}

Rational restricted_fourier_identity(const Spectrum& spectrum, const Subcube& cube, Point gamma) {
  if (cube.n() != spectrum.n) throw std::invalid_argument("subcube dimension does not match spectrum");
  if (gamma & ~cube.free_mask()) throw std::invalid_argument("gamma must be supported on the free coordinates");
  const Point complement = low_mask(spectrum.n) & ~cube.free_mask();
  std::int64_t total = 0;
  for_each_submask(complement, [&](Point delta) {
    total += spectrum.W[delta | gamma] * character_sign(delta, cube.fixed());
  });
  return Rational::dyadic(total, spectrum.n);
}

Rational restricted_fourier_identity(const BooleanFunction& f, const Subcube& cube, Point gamma) {
  return restricted_fourier_identity(walsh_transform(f), cube, gamma);
}

}  // namespace qrbf
