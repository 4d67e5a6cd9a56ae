#include "tbl/vector.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "kahan.hpp"
#include "tbl/error.hpp"

namespace tbl {

SphereVector::SphereVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) fail(Errc::bad_parameters, "vector must have at least one coordinate");
}

double SphereVector::norm_sq() const {
  detail::KahanSum acc;
  for (double c : coords_) acc.add(c * c);
  return acc.value() / static_cast<double>(coords_.size());
}

double SphereVector::norm() const { return std::sqrt(norm_sq()); }

bool SphereVector::is_unit(double tol) const { return std::fabs(norm() - 1.0) <= tol; }

bool SphereVector::is_zero() const {
  for (double c : coords_)
    if (c != 0.0) return false;
  return true;
}

SphereVector SphereVector::normalized() const {
  double nm = norm();
  if (nm == 0.0) fail(Errc::zero_vector, "cannot normalize the zero vector");
  std::vector<double> out(coords_);
  for (double& c : out) c /= nm;
  return SphereVector(std::move(out));
}

double dot(const SphereVector& x, const SphereVector& y) {
  if (x.n() != y.n()) fail(Errc::bad_parameters, "dimension mismatch");
  detail::KahanSum acc;
  for (int i = 0; i < x.n(); ++i) acc.add(x[i] * y[i]);
  return acc.value() / static_cast<double>(x.n());
}

double distance(const SphereVector& x, const SphereVector& y) {
  if (x.n() != y.n()) fail(Errc::bad_parameters, "dimension mismatch");
  detail::KahanSum acc;
  for (int i = 0; i < x.n(); ++i) {
    double d = x[i] - y[i];
    acc.add(d * d);
  }
  return std::sqrt(acc.value() / static_cast<double>(x.n()));
}

double CoordinateMeasure::mass(std::span<const int> indices) const {
  detail::KahanSum acc;
  for (int i : indices) acc.add(weights[static_cast<size_t>(i)]);
  return acc.value();
}

CoordinateMeasure mu(const SphereVector& x) {
  detail::KahanSum total;
  for (double c : x.coords()) total.add(c * c);
  double denom = total.value();
  if (denom == 0.0) fail(Errc::zero_vector, "measure of the zero vector is undefined");
  CoordinateMeasure m;
  m.weights.reserve(static_cast<size_t>(x.n()));
  for (double c : x.coords()) m.weights.push_back(c * c / denom);
  return m;
}

// --- I/O ------------------------------------------------------------------

void write_vectors_text(std::ostream& os, std::span<const SphereVector> xs) {
  os.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& x : xs) {
    const auto& c = x.coords();
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << '\n';
  }
}

std::vector<SphereVector> read_vectors_text(std::istream& is) {
  std::vector<SphereVector> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<double> coords;
    double v;
    while (ls >> v) coords.push_back(v);
    if (!coords.empty()) out.emplace_back(std::move(coords));
  }
  return out;
}

namespace {

constexpr char kMagic[4] = {'T', 'B', 'L', '1'};

void put_u32_le(std::ostream& os, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  os.write(b, 4);
}

std::uint32_t get_u32_le(const char* b) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[0])) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[1])) << 8) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[2])) << 16) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[3])) << 24);
}

void put_f64_le(std::ostream& os, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
  os.write(b, 8);
}

double get_f64_le(const char* b) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i)
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void write_vectors_binary(std::ostream& os, std::span<const SphereVector> xs) {
  for (const auto& x : xs) {
    os.write(kMagic, 4);
    put_u32_le(os, static_cast<std::uint32_t>(x.n()));
    for (double c : x.coords()) put_f64_le(os, c);
  }
}

std::vector<SphereVector> read_vectors_binary(std::istream& is) {
  std::vector<SphereVector> out;
  char head[8];
  while (is.read(head, 8)) {
    if (std::memcmp(head, kMagic, 4) != 0)
      fail(Errc::bad_parameters, "bad magic in binary vector stream (want TBL1)");
    std::uint32_t n = get_u32_le(head + 4);
    if (n == 0) fail(Errc::bad_parameters, "zero-dimensional record in binary vector stream");
    std::vector<char> buf(static_cast<size_t>(n) * 8);
    if (!is.read(buf.data(), static_cast<std::streamsize>(buf.size())))
      fail(Errc::bad_parameters, "truncated binary vector record");
    std::vector<double> coords(n);
    for (std::uint32_t i = 0; i < n; ++i) coords[i] = get_f64_le(buf.data() + 8 * i);
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace tbl
