// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "sidon2d/ddc.hpp"
#include "sidon2d/folding.hpp"
#include "sidon2d/numeric.hpp"
#include "sidon2d/sidon.hpp"

using namespace sidon2d;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primitive_roots(std::int64_t p) {
  std::vector<std::int64_t> out;
  const Field f = Field::make(static_cast<std::uint32_t>(p), 1);
  for (const auto& a : f.primitive_elements()) out.push_back(a.coeffs[0]);
  return out;
}

Field field_of(std::uint64_t q) {
  const auto pk = prime_power(q);
  return Field::make(pk->first, pk->second);
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t n, std::uint64_t from = 3) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = from; q <= n; ++q) {
    if (prime_power(q)) out.push_back(q);
  }
  return out;
}

/// Every lattice of the given volume, one Hermite basis each.
std::vector<Lattice> hermite_lattices(std::int64_t volume) {
  std::vector<Lattice> out;
  for (std::int64_t a = 1; a <= volume; ++a) {
    if (volume % a) continue;
    const std::int64_t c = volume / a;
    for (std::int64_t b = 0; b < c; ++b) out.push_back(Lattice::from_matrix(a, b, 0, c));
  }
  return out;
}

std::vector<std::int64_t> shifted(const std::vector<std::int64_t>& s, std::int64_t by, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto x : s) out.push_back(floor_mod(x - by, n));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome criterion1() {
  const auto w = construct_welch(7, 3);
  const auto s = unfold_to_sidon(w, Direction(1, 1), lower_left_dot(w));
  const std::vector<std::int64_t> expected{0, 8, 10, 11, 33, 37};
  const bool equal = s.group == GroupSpec::cyclic(42) && s.cyclic_residues() == expected;
  return {equal && !verify_sidon(s), "unfold(welch(7,3), (1,1), lower-left) over Z_42"};
}

Outcome criterion2() {
  std::int64_t patterns = 0;
  for (std::int64_t p = 3; p <= 31; ++p) {
    if (!is_prime_number(p)) continue;
    for (auto alpha : primitive_roots(p)) {
      const auto w = construct_welch(p, alpha);
      ++patterns;
      if (!w.lattice.same_lattice(Lattice::from_matrix(p - 1, 0, 0, p)) || is_doubly_periodic_ddc(w)) {
        return {false, "welch p=" + std::to_string(p) + " alpha=" + std::to_string(alpha)};
      }
    }
  }
  for (auto q : prime_powers_up_to(16)) {
    const Field f = field_of(q);
    const auto prims = f.primitive_elements();
    const auto n = static_cast<std::int64_t>(q - 1);
    for (const auto& a : prims) {
      for (const auto& b : prims) {
        const auto g = construct_golomb(f, a, b);
        ++patterns;
        if (!g.lattice.same_lattice(Lattice::from_matrix(n, 0, 0, n)) || g.dots.size() != q - 2 ||
            is_doubly_periodic_ddc(g)) {
          return {false, "golomb q=" + std::to_string(q)};
        }
      }
    }
  }
  return {true, std::to_string(patterns) + " welch/golomb patterns (all primitive elements)"};
}

Outcome criterion3() {
  std::int64_t sequences = 0;
  for (auto q : prime_powers_up_to(32)) {
    const Field f = field_of(q);
    for (const auto& alpha : f.primitive_elements()) {
      const auto s = construct_etzion(f, alpha);
      ++sequences;
      if (s.size() != q - 1 || verify_sidon(s)) return {false, "pair construction q=" + std::to_string(q) + " not Sidon"};
    }
  }
  std::string verdicts;
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
    const auto r = check_optimality(construct_etzion(q));
    if (r.verdict != OptimalityVerdict::optimal && r.verdict != OptimalityVerdict::optimal_by_bound) {
      return {false, "q=" + std::to_string(q) + " verdict " + std::string(to_string(r.verdict))};
    }
    const auto m = static_cast<std::int64_t>(q - 1);
    if (m * (m - 1) > static_cast<std::int64_t>(q * (q - 1)) - 1) return {false, "counting bound"};
    verdicts += " q=" + std::to_string(q) + ":" + std::string(to_string(r.verdict));
  }
  return {true, std::to_string(sequences) + " sequences Sidon;" + verdicts};
}

Outcome criterion4() {
  std::int64_t count = 0;
  for (std::int64_t p = 3; p <= 31; ++p) {
    if (!is_prime_number(p)) continue;
    const auto flat = crt_flatten(GroupSpec({p - 1, p})).apply(construct_etzion(static_cast<std::uint64_t>(p)));
    const auto r = construct_ruzsa(static_cast<std::uint64_t>(p));
    const auto a = flat.cyclic_residues(), b = r.cyclic_residues();
    if (flat.group != r.group || std::set<std::int64_t>(a.begin(), a.end()) != std::set<std::int64_t>(b.begin(), b.end())) {
      return {false, "p=" + std::to_string(p)};
    }
    ++count;
  }
  return {true, std::to_string(count) + " primes p <= 31"};
}

Outcome criterion5() {
  std::int64_t checked = 0, sidon = 0;
  auto agree = [&](const SidonSequence& s) {
    const bool d = !verify_sidon(s);
    ++checked;
    sidon += d;
    return d == !verify_sidon_sums(s);
  };
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::int64_t> r;
      for (std::int64_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) r.push_back(i);
      }
      if (n == 1) {
        if (!agree(SidonSequence::cyclic(2, r))) return {false, "n=1"};
        continue;
      }
      if (!agree(SidonSequence::cyclic(n, r))) return {false, "exhaustive n=" + std::to_string(n)};
    }
  }
  std::mt19937_64 rng(20240501);
  for (int t = 0; t < 10000; ++t) {
    std::uniform_int_distribution<int> rank(1, 3);
    std::vector<std::int64_t> moduli;
    std::int64_t order = 1;
    for (int r = rank(rng); r > 0; --r) {
      std::uniform_int_distribution<std::int64_t> m(2, 40);
      moduli.push_back(m(rng));
      order *= moduli.back();
    }
    if (order <= 12) moduli.push_back(13);
    const GroupSpec g(moduli);
    std::uniform_int_distribution<std::int64_t> size(0, 2 + static_cast<std::int64_t>(std::sqrt(g.order())));
    std::uniform_int_distribution<std::int64_t> pick(0, g.order() - 1);
    std::set<std::int64_t> idx;
    for (auto k = size(rng); k > 0; --k) idx.insert(pick(rng));
    SidonSequence s{g, {}};
    for (auto i : idx) s.elements.push_back(g.element(i));
    if (!agree(s)) return {false, "random instance " + std::to_string(t)};
  }
  return {true, std::to_string(checked) + " instances (" + std::to_string(sidon) + " Sidon), 0 disagreements"};
}

struct Sweep {
  std::vector<Lattice> lattices;  // criterion-6 matrices
};

Sweep sweep_lattices() {
  Sweep s;
  for (std::int64_t a = -6; a <= 6; ++a) {
    for (std::int64_t b = -6; b <= 6; ++b) {
      for (std::int64_t c = -6; c <= 6; ++c) {
        for (std::int64_t d = -6; d <= 6; ++d) {
          const bool all_nonzero = a && b && c && d;
          const bool diagonal = a && d && !b && !c;
          const auto det = a * d - b * c;
          if ((!all_nonzero && !diagonal) || det == 0 || std::abs(det) > 60) continue;
          s.lattices.push_back(Lattice::from_matrix(a, b, c, d));
        }
      }
    }
  }
  return s;
}

Outcome criterion6(const Sweep& sweep) {
  std::int64_t compared = 0;
  for (const auto& L : sweep.lattices) {
    const Tiling tiling(L, fundamental_shape(L));
    for (std::int64_t d1 = -12; d1 <= 12; ++d1) {
      for (std::int64_t d2 = -12; d2 <= 12; ++d2) {
        if (!d1 && !d2) continue;
        const Direction d(d1, d2);
        const auto closed = defines_folding_gcd(L, L.volume(), d);
        if (!closed) continue;
        ++compared;
        if (*closed != defines_folding(tiling, d)) {
          return {false, "G=[[" + std::to_string(L.v1().x) + "," + std::to_string(L.v1().y) + "],[" +
                             std::to_string(L.v2().x) + "," + std::to_string(L.v2().y) + "]] d=(" +
                             std::to_string(d1) + "," + std::to_string(d2) + ")"};
        }
      }
    }
  }
  return {true, std::to_string(sweep.lattices.size()) + " lattices, " + std::to_string(compared) +
                    " comparisons, 0 disagreements"};
}

Outcome criterion7(const Sweep& sweep) {
  std::set<std::array<std::int64_t, 3>> seen;
  std::int64_t foldable = 0, distinct = 0;
  for (const auto& L : sweep.lattices) {
    const auto H = L.hermite();
    if (!seen.insert({H.v1().x, H.v1().y, H.v2().y}).second) continue;
    ++distinct;
    const auto S = fundamental_shape(L);
    const auto dirs = folding_directions(L, S);
    if (dirs.empty()) continue;
    ++foldable;
    if (static_cast<std::int64_t>(dirs.size()) != euler_phi(L.volume())) {
      return {false, "volume " + std::to_string(L.volume()) + " gives " + std::to_string(dirs.size())};
    }
  }
  for (std::int64_t m = 2; m <= 12; ++m) {
    if (!folding_directions(Lattice::from_matrix(m, 0, 0, m), Shape::rectangle(m, m)).empty()) {
      return {false, "square m=" + std::to_string(m) + " folds"};
    }
  }
  return {true, std::to_string(foldable) + " foldable of " + std::to_string(distinct) +
                    " distinct lattices match phi(|S|); squares m=2..12 empty"};
}

Outcome criterion8() {
  std::vector<SidonSequence> inputs;
  for (std::uint64_t q = 2; q * q - 1 <= 60; ++q) {
    if (prime_power(q)) inputs.push_back(construct_bose(q));
  }
  for (std::uint64_t p = 3; p * (p - 1) <= 60; ++p) {
    if (!is_prime_number(static_cast<std::int64_t>(p))) continue;
    inputs.push_back(construct_ruzsa(p));
    const Field f = Field::make(static_cast<std::uint32_t>(p), 1);
    const auto phi = crt_flatten(GroupSpec({static_cast<std::int64_t>(p - 1), static_cast<std::int64_t>(p)}));
    for (const auto& alpha : f.primitive_elements()) inputs.push_back(phi.apply(construct_etzion(f, alpha)));
  }
  for (std::uint64_t q = 2; q * q + q + 1 <= 60; ++q) {
    if (prime_power(q)) inputs.push_back(construct_singer(q));
  }

  std::int64_t round_trips = 0;
  for (const auto& s : inputs) {
    const auto n = s.group.order();
    const auto residues = s.cyclic_residues();
    for (const auto& L : hermite_lattices(n)) {
      const Tiling tiling(L, fundamental_shape(L));
      for (const auto& d : folding_directions(tiling)) {
        const auto c = fold_sidon_to_ddc(s, L, tiling.shape(), d);
        if (is_doubly_periodic_ddc(c)) return {false, "folded pattern not a DDC, n=" + std::to_string(n)};
        const auto row = folded_row(tiling, d);
        const auto back = unfold_to_sidon(c, d, row.points[static_cast<std::size_t>(residues.front())]);
        if (back.cyclic_residues() != shifted(residues, residues.front(), n)) {
          return {false, "round trip, n=" + std::to_string(n)};
        }
        ++round_trips;
      }
    }
  }

  // Unfold verified doubly periodic DDCs.
  std::vector<PeriodicDdc> ddcs;
  for (std::int64_t p = 3; p <= 31; ++p) {
    if (is_prime_number(p)) {
      for (auto alpha : primitive_roots(p)) ddcs.push_back(construct_welch(p, alpha));
    }
  }
  for (std::int64_t v = 2; v <= 30; ++v) {
    for (const auto& L : hermite_lattices(v)) {
      const auto S = fundamental_shape(L);
      if (folding_directions(L, S).empty()) continue;
      ddcs.push_back({L, S, max_ddc_dots(L, S).witness});
    }
  }
  std::int64_t unfolds = 0;
  for (const auto& c : ddcs) {
    if (is_doubly_periodic_ddc(c)) return {false, "input pattern not a DDC"};
    const Tiling tiling = c.validate();
    for (const auto& d : folding_directions(tiling)) {
      for (const auto& anchor : c.dots) {
        if (verify_sidon(unfold_to_sidon(c, d, anchor))) return {false, "unfold not Sidon"};
        ++unfolds;
      }
    }
  }
  return {true, std::to_string(inputs.size()) + " sequences, " + std::to_string(round_trips) + " round trips; " +
                    std::to_string(ddcs.size()) + " DDCs, " + std::to_string(unfolds) + " unfolds Sidon"};
}

Outcome criterion9() {
  using clock = std::chrono::steady_clock;
  double slowest = 0;
  auto timed = [&](auto&& f) {
    const auto start = clock::now();
    auto r = f();
    slowest = std::max(slowest, std::chrono::duration<double>(clock::now() - start).count());
    return r;
  };
  const auto z7 = timed([] { return max_sidon_size(GroupSpec::cyclic(7)); });
  const auto z6 = timed([] { return max_sidon_size(GroupSpec::cyclic(6)); });
  const auto ddc = timed([] { return max_ddc_dots(Lattice::from_matrix(6, 0, 0, 7), Shape::rectangle(6, 7)); });
  const auto welch = construct_welch(7, 3);
  const bool ok = z7.max == 3 && z6.max == 2 && ddc.max == 6 &&
                  ddc.max == static_cast<std::int64_t>(welch.dots.size()) && slowest < 60;
  return {ok, "Z_7 -> " + std::to_string(z7.max) + ", Z_6 -> " + std::to_string(z6.max) + ", 6x7 DDC -> " +
                  std::to_string(ddc.max)};
}

Outcome criterion10() {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::int64_t> small(-3, 3), coef(-2, 2);
  std::bernoulli_distribution coin(0.5);
  int generated = 0;
  while (generated < 1000) {
    const std::int64_t a = small(rng), b = small(rng), c = small(rng), d = small(rng);
    if (a * d - b * c == 0 || std::abs(a * d - b * c) > 12) continue;
    const auto M = Lattice::from_matrix(a, b, c, d);
    const std::int64_t k11 = coef(rng), k12 = coef(rng), k21 = coef(rng), k22 = coef(rng);
    if (k11 * k22 - k12 * k21 == 0) continue;
    // L = K G_M is a sublattice of M.
    const Point l1 = k11 * M.v1() + k12 * M.v2();
    const Point l2 = k21 * M.v1() + k22 * M.v2();
    const Lattice L(l1, l2);
    if (L.volume() > 400) continue;

    const auto SM = fundamental_shape(M);
    std::vector<Point> motif;
    for (auto p : SM.points()) {
      if (coin(rng)) motif.push_back(p);
    }
    std::set<std::int64_t> motif_cosets;
    for (auto p : motif) motif_cosets.insert(M.coset_index(p));
    const auto SL = fundamental_shape(L);
    std::vector<Point> dots;
    for (auto p : SL.points()) {
      if (motif_cosets.contains(M.coset_index(p))) dots.push_back(p);
    }
    const Tiling tiling(L, SL);
    const auto P = minimal_period(tiling, dots);
    const PeriodPair by_m{M.v1(), M.v2()}, by_l{L.v1(), L.v2()};
    if (!is_symmetry(tiling, dots, M.v1()) || !is_symmetry(tiling, dots, M.v2())) {
      return {false, "generator of M is not a symmetry"};
    }
    if (by_m.volume() % P.volume() || by_l.volume() % P.volume()) {
      return {false, "volume " + std::to_string(P.volume()) + " does not divide " + std::to_string(by_m.volume()) +
                         " / " + std::to_string(by_l.volume())};
    }
    ++generated;
  }
  return {true, std::to_string(generated) + " patterns, minimal volume divides every generating pair"};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failures = 0;
  const auto run = [&](int id, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    if (limit_seconds > 0 && seconds > limit_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
    }
    failures += !o.pass;
    std::printf("AC%-2d %s  %.2fs  %s\n", id, o.pass ? "PASS" : "FAIL", seconds, o.detail.c_str());
    std::fflush(stdout);
  };

  run(1, 1, criterion1);
  run(2, 10, criterion2);
  run(3, 30, criterion3);
  run(4, 0, criterion4);
  run(5, 0, criterion5);
  const Sweep sweep = sweep_lattices();
  run(6, 60, [&] { return criterion6(sweep); });
  run(7, 0, [&] { return criterion7(sweep); });
  run(8, 0, criterion8);
  run(9, 0, criterion9);
  run(10, 0, criterion10);
  return failures == 0 ? 0 : 1;
}
