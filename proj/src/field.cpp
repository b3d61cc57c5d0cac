#include "rlc/field.hpp"

#include <array>
#include <optional>
#include <string>

#include "rlc/errors.hpp"

namespace rlc {

namespace {

// Standard primitive polynomials over F_2 as bit masks (bit i = coefficient
// of x^i), indexed by degree.
constexpr std::array<std::uint32_t, 17> kBinaryPrimitive = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x89,   0x11D,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

struct Digits {
  unsigned p, e, q;

  std::vector<unsigned> split(unsigned a) const {
    std::vector<unsigned> d(e);
    for (unsigned i = 0; i < e; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  unsigned join(const std::vector<unsigned>& d) const {
    unsigned a = 0;
    for (unsigned i = e; i-- > 0;) a = a * p + d[i];
    return a;
  }
  // a * x mod f, where f = x^e + sum_{i<e} f[i] x^i.
  unsigned times_x(unsigned a, const std::vector<unsigned>& f) const {
    auto d = split(a);
    unsigned top = d[e - 1];
    for (unsigned i = e - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    for (unsigned i = 0; i < e; ++i) d[i] = (d[i] + (p - f[i]) % p * top) % p;
    return join(d);
  }
};

// Order of x modulo f equals q-1 (which also forces f irreducible).
bool is_primitive(const Digits& dg, const std::vector<unsigned>& f) {
  if (f[0] == 0) return false;
  unsigned a = 1;
  for (unsigned i = 1; i < dg.q; ++i) {
    a = dg.times_x(a, f);
    if (a == 1) return i == dg.q - 1;
  }
  return false;
}

std::vector<unsigned> choose_modulus(const Digits& dg) {
  std::vector<unsigned> f(dg.e + 1, 0);
  f[dg.e] = 1;
  if (dg.p == 2 && dg.e < kBinaryPrimitive.size()) {
    for (unsigned i = 0; i < dg.e; ++i) f[i] = (kBinaryPrimitive[dg.e] >> i) & 1u;
    if (!is_primitive(dg, f)) throw std::logic_error("built-in modulus is not primitive");
    return f;
  }
  // Odometer over (f0, f1, ..., f_{e-1}) with f_{e-1} moving fastest.
  std::vector<unsigned> c(dg.e, 0);
  while (true) {
    for (unsigned i = 0; i < dg.e; ++i) f[i] = c[i];
    if (is_primitive(dg, f)) return f;
    unsigned pos = dg.e;
    while (pos > 0) {
      --pos;
      if (++c[pos] < dg.p) break;
      c[pos] = 0;
      if (pos == 0) throw std::logic_error("no primitive polynomial found");
    }
  }
}

}  // namespace

bool is_prime(unsigned p) noexcept {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::make(unsigned p, unsigned e) {
  if (!is_prime(p)) throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw ParameterError("field extension degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > (1u << 16)) throw ParameterError("field order exceeds 2^16");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<unsigned>(q);
  const Digits dg{p, e, t->q};
  t->modulus = choose_modulus(dg);

  const unsigned n_units = t->q - 1;
  t->exp.resize(2 * static_cast<std::size_t>(n_units));
  t->log.assign(t->q, 0);
  unsigned a = 1;
  for (unsigned i = 0; i < n_units; ++i) {
    t->exp[i] = static_cast<Elem>(a);
    t->exp[i + n_units] = static_cast<Elem>(a);
    t->log[a] = i;
    a = dg.times_x(a, t->modulus);
  }

  t->neg.resize(t->q);
  t->inv.assign(t->q, 0);
  for (unsigned x = 0; x < t->q; ++x) {
    auto d = dg.split(x);
    for (auto& v : d) v = (p - v) % p;
    t->neg[x] = static_cast<Elem>(dg.join(d));
    if (x != 0) t->inv[x] = t->exp[(n_units - t->log[x]) % n_units];
  }

  if (t->q <= 256) {
    const std::size_t qq = static_cast<std::size_t>(t->q) * t->q;
    t->add.resize(qq);
    t->mul.resize(qq);
    for (unsigned x = 0; x < t->q; ++x) {
      const auto dx = dg.split(x);
      for (unsigned y = 0; y < t->q; ++y) {
        auto dy = dg.split(y);
        for (unsigned i = 0; i < e; ++i) dy[i] = (dy[i] + dx[i]) % p;
        t->add[x * t->q + y] = static_cast<Elem>(dg.join(dy));
        t->mul[x * t->q + y] =
            (x == 0 || y == 0) ? Elem{0} : t->exp[t->log[x] + t->log[y]];
      }
    }
  }
  return Field(std::move(t));
}

Field Field::of_order(unsigned q) {
  if (q < 2) throw ParameterError("field order must be >= 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  return make(p, e);
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  const unsigned p = t_->p;
  unsigned out = 0, scale = 1;
  unsigned x = a, y = b;
  for (unsigned i = 0; i < t_->e; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return static_cast<Elem>(out);
}

}  // namespace rlc
