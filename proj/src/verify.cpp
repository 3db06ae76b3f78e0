#include "carpets/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "carpets/carpet.hpp"
#include "carpets/errors.hpp"
#include "carpets/tiling.hpp"

namespace carpets {

namespace {

// Counts cases and keeps the first failure.
class Recorder {
 public:
  Recorder(std::string name, std::string statement) {
    result_.name = std::move(name);
    result_.statement = std::move(statement);
  }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string where(const FieldSpec& f, Code m, unsigned d = 1) {
  std::ostringstream out;
  out << "field " << f.descriptor() << ", m=" << m << ", d=" << d;
  return out.str();
}

std::vector<std::uint32_t> primes_in(const VerifyBounds& b, std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : primes_up_to(hi)) {
    if (p < lo) continue;
    if (b.only_p && p != *b.only_p) continue;
    out.push_back(p);
  }
  return out;
}

std::vector<FieldSpec> extension_fields(const VerifyBounds& b) {
  std::vector<FieldSpec> out;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    if (b.only_p && p != *b.only_p) continue;
    out.push_back(FieldSpec::with_default_modulus(p, 2));
  }
  return out;
}

// ---------------------------------------------------------------------------

CheckResult check_tensor(const VerifyBounds& b) {
  Recorder rec("tensor", "recurrence = tensor product of Frobenius conjugates = digit-product random access");
  auto compare = [&](const FieldSpec& f, Code m, unsigned d) {
    const CarpetParams params(f, m, d);
    const CarpetMatrix dense = generate_recurrence(params);
    const CarpetMatrix tensor = tensor_construction(params);
    rec.expect(dense.values == tensor.values, [&] { return "tensor route differs: " + where(f, m, d); });

    const EntryOracle oracle(params);
    bool same = true;
    for (std::size_t i = 0; i < dense.side() && same; ++i) {
      for (std::size_t j = 0; j < dense.side() && same; ++j) same = oracle(i, j) == dense(i, j);
    }
    rec.expect(same, [&] { return "entry_at differs: " + where(f, m, d); });

    RowStream stream(params);
    std::vector<Code> row;
    bool rows_same = true;
    while (stream.next(row)) {
      const auto i = static_cast<std::size_t>(stream.next_index() - 1);
      rows_same = rows_same && std::equal(row.begin(), row.end(), dense.values.row(i).begin());
    }
    rec.expect(rows_same, [&] { return "stream_rows differs: " + where(f, m, d); });
  };

  for (std::uint32_t p : primes_in(b, 2, b.tensor_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    for (Code m = 0; m < p; ++m) {
      for (unsigned d = 1; d <= b.tensor_dmax; ++d) compare(f, m, d);
    }
  }
  for (const FieldSpec& f : extension_fields(b)) {
    for (Code m = 0; m < f.order(); ++m) {
      for (unsigned d = 1; d <= b.extension_dmax; ++d) compare(f, m, d);
      if (!f.in_prime_subfield(m)) continue;
      // m in GF(p): Frobenius is trivial on the block, so M_d = F^{(x)d}.
      const Matrix block = fundamental_block(f, m);
      Matrix power = block;
      for (unsigned d = 2; d <= b.extension_dmax; ++d) {
        power = tensor_product(power, block);
        rec.expect(power == tensor_construction(CarpetParams(f, m, d)).values,
                   [&] { return "prime-field collapse fails: " + where(f, m, d); });
      }
    }
  }
  return rec.finish();
}

CheckResult check_closed_form(const VerifyBounds& b) {
  Recorder rec("closed_form", "f(n,k) = sum_a m^a C(n,a) C(n+k-a,k-a) on the depth-2 grid");
  for (std::uint32_t p : primes_in(b, 2, b.tensor_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    for (Code m = 0; m < p; ++m) {
      const CarpetMatrix dense = generate_recurrence(CarpetParams(f, m, 2));
      const FieldElement me(f, m);
      for (std::uint32_t n = 0; n < dense.side(); ++n) {
        for (std::uint32_t k = 0; k < dense.side(); ++k) {
          rec.expect(closed_form_f(n, k, me).code() == dense(n, k), [&] {
            return "closed form differs at (" + std::to_string(n) + "," + std::to_string(k) + "): " + where(f, m, 2);
          });
        }
      }
    }
  }
  return rec.finish();
}

CheckResult check_last_row(const VerifyBounds& b) {
  Recorder rec("last_row", "last row and last column of F(p,m) are (1, -m, ..., (-m)^(p-1))");
  auto run = [&](const FieldSpec& f, Code m) {
    const Matrix block = fundamental_block(f, m);
    const auto expected = last_row(f, FieldElement(f, m));
    const std::size_t last = block.rows() - 1;
    bool ok = true;
    for (std::size_t k = 0; k < block.rows(); ++k) {
      ok = ok && block(last, k) == expected[k].code() && block(k, last) == expected[k].code();
    }
    rec.expect(ok, [&] { return where(f, m); });
  };
  for (std::uint32_t p : primes_in(b, 2, b.duality_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    for (Code m = 0; m < p; ++m) run(f, m);
  }
  for (const FieldSpec& f : extension_fields(b)) {
    for (Code m = 0; m < f.order(); ++m) run(f, m);
  }
  return rec.finish();
}

CheckResult check_cells(const VerifyBounds& b) {
  Recorder rec("cells", "blocks aF, bF, cF propagate to dF with d = phi(m) a + b + c");
  std::mt19937 rng(20240611);
  auto run = [&](const FieldSpec& f, Code m) {
    const Matrix block = fundamental_block(f, m);
    const std::size_t p = block.rows();
    std::uniform_int_distribution<Code> pick(0, f.order() - 1);
    for (int sample = 0; sample < 8; ++sample) {
      const Code alpha = pick(rng), beta = pick(rng), gamma = pick(rng);
      Matrix grid(f, 2 * p, 2 * p);
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
          grid(i, j) = f.mul(alpha, block(i, j));
          grid(i, j + p) = f.mul(beta, block(i, j));
          grid(i + p, j) = f.mul(gamma, block(i, j));
        }
      }
      for (std::size_t i = p; i < 2 * p; ++i) {
        for (std::size_t j = p; j < 2 * p; ++j) {
          grid(i, j) = f.add(f.add(grid(i - 1, j), f.mul(m, grid(i - 1, j - 1))), grid(i, j - 1));
        }
      }
      const Code delta = f.add(f.add(f.mul(f.frobenius(m), alpha), beta), gamma);
      bool ok = true;
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) ok = ok && grid(i + p, j + p) == f.mul(delta, block(i, j));
      }
      rec.expect(ok, [&] {
        return where(f, m) + ", (a,b,c)=(" + std::to_string(alpha) + "," + std::to_string(beta) + "," +
               std::to_string(gamma) + ")";
      });
    }
  };
  for (std::uint32_t p : primes_in(b, 2, b.tensor_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    for (Code m = 0; m < p; ++m) run(f, m);
  }
  for (const FieldSpec& f : extension_fields(b)) {
    for (Code m = 0; m < f.order(); ++m) run(f, m);
  }
  return rec.finish();
}

CheckResult check_duality(const VerifyBounds& b) {
  Recorder rec("duality", "O F(p,m) = Sigma F(p,1/m) with its entrywise and support corollaries");
  for (std::uint32_t p : primes_in(b, 2, b.duality_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    for (Code m = 1; m < p; ++m) {
      const CarpetMatrix block = generate_recurrence(CarpetParams(f, m, 1));
      const Matrix dual = fundamental_block(f, f.inv(m));
      rec.expect(row_rescale_O(block) == mirror(dual), [&] { return "O F != Sigma F': " + where(f, m); });

      const Code step = f.inv(f.neg(m));  // (-m)^{-1}
      bool item1 = true, item2 = true;
      Code scale_i = 1;
      for (std::uint32_t i = 0; i < p; ++i) {
        for (std::uint32_t j = 0; j < p; ++j) {
          const Code lhs = f.mul(block(i, j), scale_i);
          item1 = item1 && dual(i, p - 1 - j) == lhs;
          const Code rhs = f.mul(block(p - 1 - j, p - 1 - i), f.pow(step, p - 1 - j));
          item2 = item2 && lhs == rhs;
        }
        scale_i = f.mul(scale_i, step);
      }
      rec.expect(item1, [&] { return "a'(i,p-1-j) != a(i,j)(-m)^-i: " + where(f, m); });
      rec.expect(item2, [&] { return "second-diagonal identity fails: " + where(f, m); });
      rec.expect(support(block) == support(mirror(dual)), [&] { return "support mirror fails: " + where(f, m); });
    }
  }
  return rec.finish();
}

CheckResult check_symmetry(const VerifyBounds& b) {
  Recorder rec("symmetry", "classification label matches the brute-force isometry group");
  for (std::uint32_t p : primes_in(b, 2, b.symmetry_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    for (Code m = 0; m < p; ++m) {
      const SymmetryClass cls = classify_symmetry(f, m);
      const IsometrySet found = symmetry_subgroup(support(fundamental_block(f, m)));
      rec.expect(is_subgroup(found), [&] { return "not a group: " + where(f, m); });
      rec.expect(cls.subgroup == found, [&] {
        return std::string(label_name(cls.label)) + " but group has " + std::to_string(found.count()) +
               " elements: " + where(f, m);
      });
      if (p > b.symmetry_depth_pmax) continue;
      for (unsigned d = 2; d <= b.symmetry_dmax; ++d) {
        const IsometrySet deep = symmetry_subgroup(support(tensor_construction(CarpetParams(f, m, d))));
        rec.expect(cls.subgroup == deep, [&] { return "depth group differs: " + where(f, m, d); });
      }
    }
  }
  const IsometrySet klein = label_subgroup(SymmetryLabel::kKleinK4);
  for (const FieldSpec& f : extension_fields(b)) {
    for (Code m = 1; m < f.order(); ++m) {
      const IsometrySet found = symmetry_subgroup(support(fundamental_block(f, m)));
      rec.expect((found & klein) == klein, [&] { return "missing a diagonal reflection: " + where(f, m); });
    }
  }
  return rec.finish();
}

CheckResult check_diagonals(const VerifyBounds& b) {
  Recorder rec("diagonals",
               "odd diagonal entries of F(p,-2), F(p,-1/2) vanish, even ones do not; "
               "4(n+1)S(n) + (n+2)S(n+2) = 0");
  for (std::uint32_t p : primes_in(b, 5, b.diagonal_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    const Code minus_two = f.from_integer(-2);
    const Code minus_half = f.neg(f.inv(2));
    const Matrix main_block = fundamental_block(f, minus_two);
    const Matrix anti_block = fundamental_block(f, minus_half);
    for (std::uint32_t i = 0; i < p; ++i) {
      const bool odd = i % 2 == 1;
      rec.expect((main_block(i, i) == 0) == odd, [&] {
        return "main diagonal (" + std::to_string(i) + "," + std::to_string(i) + "): " + where(f, minus_two);
      });
      rec.expect((anti_block(i, p - 1 - i) == 0) == odd, [&] {
        return "anti diagonal (" + std::to_string(i) + "," + std::to_string(p - 1 - i) + "): " + where(f, minus_half);
      });
    }
  }

  std::vector<BigInt> s;
  for (std::uint64_t n = 0; n <= b.central_sum_nmax + 2; ++n) s.push_back(central_sum_S(n));
  rec.expect(s[0] == 1 && s[1] == 0, [] { return std::string("S(0) != 1 or S(1) != 0"); });
  for (std::uint64_t n = 0; n <= b.central_sum_nmax; ++n) {
    const BigInt lhs = BigInt(4 * (n + 1)) * s[n] + BigInt(n + 2) * s[n + 2];
    rec.expect(lhs == 0, [&] { return "recurrence fails at n=" + std::to_string(n); });
    const BigInt closed = n % 2 == 1 ? BigInt(0) : ((n / 2) % 2 == 0 ? 1 : -1) * binomial(n, n / 2);
    rec.expect(s[n] == closed, [&] { return "closed form fails at n=" + std::to_string(n); });
  }
  return rec.finish();
}

CheckResult check_cross(const VerifyBounds& b) {
  Recorder rec("cross", "m = 1: last row alternates, a(n,k) = (-1)^n a(n,p-1-k), the cross is zero");
  for (std::uint32_t p : primes_in(b, 3, b.cross_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    const Matrix block = fundamental_block(f, 1);
    const Code minus_one = f.neg(1);
    bool alternates = true, antisymmetric = true;
    for (std::uint32_t k = 0; k < p; ++k) alternates = alternates && block(p - 1, k) == (k % 2 ? minus_one : 1);
    for (std::uint32_t n = 0; n < p; ++n) {
      for (std::uint32_t k = 0; k < p; ++k) {
        const Code mirrored = block(n, p - 1 - k);
        antisymmetric = antisymmetric && block(n, k) == (n % 2 ? f.neg(mirrored) : mirrored);
      }
    }
    rec.expect(alternates, [&] { return "last row: " + where(f, 1); });
    rec.expect(antisymmetric, [&] { return "row antisymmetry: " + where(f, 1); });
    for (const Cell& c : cross_cells(p)) {
      rec.expect(block(c.i, c.j) == 0, [&] {
        return "cross cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") nonzero: " + where(f, 1);
      });
    }
  }
  return rec.finish();
}

CheckResult check_delannoy(const VerifyBounds& b) {
  Recorder rec("delannoy", "Delannoy numbers count S/SE/E paths and reduce to f(n,k) at m = 1");
  for (std::uint64_t n = 0; n <= b.delannoy_path_nmax; ++n) {
    for (std::uint64_t k = 0; k <= b.delannoy_path_nmax; ++k) {
      rec.expect(delannoy(n, k) == count_lattice_paths(n, k), [&] {
        return "D(" + std::to_string(n) + "," + std::to_string(k) + ") != path count";
      });
    }
  }
  for (std::uint32_t p : primes_in(b, 3, b.delannoy_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    const FieldElement one(f, 1);
    for (std::uint32_t n = 0; n < p; ++n) {
      for (std::uint32_t k = 0; k < p; ++k) {
        const BigInt residue = delannoy(n, k) % p;
        rec.expect(residue == closed_form_f(n, k, one).code(), [&] {
          return "D(" + std::to_string(n) + "," + std::to_string(k) + ") mod " + std::to_string(p);
        });
      }
    }
  }
  return rec.finish();
}

CheckResult check_bounds(const VerifyBounds& b) {
  Recorder rec("bounds", "F(p,m), m != -1, has >= 2 zeros (p > 3), >= 3 (p = 7), >= 4 (p >= 11)");
  for (std::uint32_t p : primes_in(b, 2, b.bounds_pmax)) {
    const ZeroCountBounds bounds = zero_count_bounds_check(p);
    for (const auto& [m, count] : bounds.counts) {
      rec.expect(count >= bounds.required, [&, m = m, count = count] {
        return where(FieldSpec::prime(p), m) + " has " + std::to_string(count) + " zeros, need " +
               std::to_string(bounds.required);
      });
    }
  }
  return rec.finish();
}

CheckResult check_tiling(const VerifyBounds& b) {
  Recorder rec("tiling", "tile assembly is deterministic, reproduces M_d, and meets the catalog bounds");
  for (std::uint32_t p : primes_in(b, 2, b.tiling_pmax)) {
    const FieldSpec f = FieldSpec::prime(p);
    for (Code m = 0; m < p; ++m) {
      if (m == f.neg(1) || !has_zeros(f, m)) continue;
      const TileSet tiles = build_tile_set(f, m);
      const std::uint64_t bound = m == 0 ? std::uint64_t{p} * p : tiles.r * tiles.r * tiles.r + 2;
      rec.expect(tiles.tiles.size() <= bound, [&] { return "catalog too large: " + where(f, m); });
      for (unsigned d = 1; d <= b.tiling_dmax; ++d) {
        const Assembly assembled = assemble(tiles, d);
        rec.expect(assembled.ambiguous.empty(), [&] { return "ambiguous placement: " + where(f, m, d); });
        rec.expect(assembled.colors == generate_recurrence(CarpetParams(f, m, d)).values,
                   [&] { return "assembly differs from recurrence: " + where(f, m, d); });
      }
      if (p <= 5) {
        const auto witness = aperiodicity_witness(f, m, b.tiling_dmax + 1);
        for (std::size_t d = 0; d + 1 < witness.size(); ++d) {
          rec.expect(witness[d + 1] >= p * witness[d], [&] { return "white squares do not grow: " + where(f, m); });
        }
      }
    }
  }
  return rec.finish();
}

CheckResult check_scan(const VerifyBounds& b) {
  Recorder rec("scan", "GF(19^2) with x^2 + 1 has exactly the 29 listed carpet classes with zeros");
  if (b.only_p && *b.only_p != 19) return rec.finish();
  const FieldSpec f = FieldSpec::parse("19^2/1,0,1");
  const std::vector<Code> expected = {0,  1,  2,  3,  4,  6,  7,  8,   9,   14,  19,  21,  35,  47, 52,
                                      53, 56, 63, 69, 76, 78, 88, 92, 102, 130, 136, 137, 148, 168};
  rec.expect(scan_field(f) == expected, [] { return std::string("scan of 19^2/1,0,1 differs"); });
  return rec.finish();
}

CheckResult check_sporadic(const VerifyBounds& b) {
  Recorder rec("sporadic",
               "m = 1: only regular zeros for p = 3, 5, 7, 11, 19; sporadic zeros for p = 13 and every p >= 23");
  for (std::uint32_t p : primes_in(b, 3, b.sporadic_pmax)) {
    const bool only_regular = p == 3 || p == 5 || p == 7 || p == 11 || p == 19;
    const bool expect_sporadic = p == 13 || p >= 23;
    if (!only_regular && !expect_sporadic) continue;
    const ZeroReport report = zero_report(FieldSpec::prime(p), 1);
    rec.expect(report.sporadic.empty() == only_regular, [&] {
      return "p=" + std::to_string(p) + " has " + std::to_string(report.sporadic.size()) + " sporadic zeros";
    });
  }
  return rec.finish();
}

using CheckFn = CheckResult (*)(const VerifyBounds&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"tensor", check_tensor},     {"closed_form", check_closed_form}, {"last_row", check_last_row},
      {"cells", check_cells},       {"duality", check_duality},         {"symmetry", check_symmetry},
      {"diagonals", check_diagonals}, {"cross", check_cross},           {"delannoy", check_delannoy},
      {"bounds", check_bounds},     {"tiling", check_tiling},           {"scan", check_scan},
      {"sporadic", check_sporadic},
  };
  return checks;
}

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 2; k <= n; ++k) {
    if (is_prime(k)) out.push_back(k);
  }
  return out;
}

std::uint64_t count_lattice_paths(std::uint64_t n, std::uint64_t k) {
  if (n == 0 && k == 0) return 1;
  std::uint64_t total = 0;
  if (n > 0) total += count_lattice_paths(n - 1, k);
  if (k > 0) total += count_lattice_paths(n, k - 1);
  if (n > 0 && k > 0) total += count_lattice_paths(n - 1, k - 1);
  return total;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

CheckResult run_check(std::string_view name, const VerifyBounds& bounds) {
  for (const auto& [key, fn] : registry()) {
    if (key == name) return fn(bounds);
  }
  throw UsageError("unknown check '" + std::string(name) + "'");
}

std::vector<CheckResult> run_all(const VerifyBounds& bounds) {
  std::vector<CheckResult> out;
  for (const auto& [key, fn] : registry()) out.push_back(fn(bounds));
  return out;
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json out = {{"name", r.name}, {"statement", r.statement}, {"passed", r.passed}, {"cases", r.cases}};
  out["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
  return out;
}

}  // namespace carpets
