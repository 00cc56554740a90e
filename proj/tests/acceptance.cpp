// Acceptance suite: runs every criterion at its stated scope and tolerance
// (exact equality throughout) and prints one pass/fail line per criterion.
// Exit code is the number of failed criteria.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "phit/combinat.hpp"
#include "phit/drinfeld.hpp"
#include "phit/io.hpp"

namespace fs = std::filesystem;
using namespace phit;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& ex) {
    ok = false;
    detail = std::string("exception: ") + ex.what();
  }
  std::printf("criterion %02d %s: %s%s%s\n", number, label.c_str(),
              ok ? "PASS" : "FAIL", detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

const std::vector<uint64_t>& phi_q_set() {
  static const std::vector<uint64_t> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
  return qs;
}

std::map<uint64_t, ModularPoly>& phi_cache() {
  static std::map<uint64_t, ModularPoly> cache;
  return cache;
}

const ModularPoly& phi_for(uint64_t q) {
  auto it = phi_cache().find(q);
  if (it == phi_cache().end()) it = phi_cache().emplace(q, expand_phi(q)).first;
  return it->second;
}

std::vector<uint64_t> prime_powers_upto(uint64_t bound) {
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p <= bound; ++p) {
    bool prime = true;
    for (uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    for (uint64_t q = p; q <= bound; q *= p) {
      out.push_back(q);
      if (q > bound / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned min_ext(uint64_t q) {
  unsigned k = 1;
  long double size = (long double)q;
  while (size < 65536.0L) {
    size *= (long double)q;
    ++k;
  }
  return k;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion(1, "closed-form-validity [substitution, q in {2..27}]", [](std::string& d) {
    for (uint64_t q : phi_q_set())
      if (!verify_substitution(phi_for(q))) {
        d = "q=" + std::to_string(q);
        return false;
      }
    return true;
  });

  criterion(2, "boundary-formulas [P_{q+1}, P_q, P_1, P_0]", [](std::string& d) {
    for (uint64_t q : phi_q_set())
      if (!verify_boundary(phi_for(q)).ok()) {
        d = "q=" + std::to_string(q);
        return false;
      }
    return true;
  });

  criterion(3, "ratio-identity [cross-multiplied]", [](std::string& d) {
    for (uint64_t q : phi_q_set())
      if (!verify_ratio(phi_for(q))) {
        d = "q=" + std::to_string(q);
        return false;
      }
    return true;
  });

  criterion(4, "catalan-identity [q <= 1024, both forms]", [](std::string& d) {
    for (uint64_t q : prime_powers_upto(1024)) {
      auto r = verify_catalan_identity(q);
      if (!r.main_form || !r.restated) {
        d = "q=" + std::to_string(q);
        return false;
      }
    }
    return true;
  });

  criterion(5, "char0-identity [2 <= e <= 64]", [](std::string& d) {
    for (unsigned e = 2; e <= 64; ++e)
      if (!verify_char0_identity(e).ok) {
        d = "e=" + std::to_string(e);
        return false;
      }
    return true;
  });

  criterion(6, "lemma-suite [reduction, trinomial/sum, catalan congruence]",
            [](std::string& d) {
    // reduction lemma, exhaustive over its stated range
    for (uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
      auto pe = factor_prime_power(q);
      uint32_t p = pe.first;
      for (int64_t n = 0; n <= int64_t(3 * q); ++n)
        for (int64_t k = n - int64_t(q) + 1; k <= n + int64_t(q); ++k) {
          if (n - k >= int64_t(q)) continue;
          uint32_t lhs = binom_mod_p(n, k, p);
          uint32_t rhs = binom_mod_p(int64_t(q) - 1 - k, n - k, p);
          if ((n - k) & 1) rhs = (p - rhs) % p;
          if (lhs != rhs) {
            d = "reduction q=" + std::to_string(q);
            return false;
          }
        }
    }
    // trinomial revision and the alternating sum, exhaustive small sweep
    for (int64_t r = -10; r <= 10; ++r) {
      for (int64_t l = 0; l <= 8; ++l)
        if (!verify_trinomial_and_sum(r, 0, 0, l).second) {
          d = "sum r=" + std::to_string(r);
          return false;
        }
      for (int64_t m = -10; m <= 10; ++m)
        for (int64_t n = -10; n <= 10; ++n)
          if (!verify_trinomial_and_sum(r, m, n, 0).first) {
            d = "trinomial r=" + std::to_string(r);
            return false;
          }
    }
    // catalan congruence vs exact residues, every q <= 512, full index range
    for (uint64_t q : prime_powers_upto(512)) {
      auto pe = factor_prime_power(q);
      uint32_t p = pe.first;
      for (uint64_t i = 0; i + 1 < q; ++i)
        if (catalan_mod_via_congruence(i, q) != catalan_mod_p(size_t(i), p)) {
          d = "congruence q=" + std::to_string(q);
          return false;
        }
    }
    return true;
  });

  criterion(7, "vanishing-window [q <= 1024]", [](std::string& d) {
    for (uint64_t q : prime_powers_upto(1024)) {
      if (q < 4) continue;  // empty window
      if (!verify_zero_window(q)) {
        d = "q=" + std::to_string(q);
        return false;
      }
    }
    return true;
  });

  criterion(8, "proof-intermediates [q in {2..9}]", [](std::string& d) {
    for (uint64_t q : {2, 3, 4, 5, 7, 8, 9})
      if (!verify_proof_intermediates(q).ok()) {
        d = "q=" + std::to_string(q);
        return false;
      }
    return true;
  });

  criterion(9, "oracle-equivalence [interp x5, resultant x10, mutation]",
            [](std::string& d) {
    for (uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      const ModularPoly& phi = phi_for(q);
      unsigned k = min_ext(q);
      Rng root(20260809);
      for (unsigned t = 0; t < 5; ++t) {
        auto res = oracle_interpolate(phi, k, root.fork(q * 100 + t).next());
        if (!res.ok) {
          d = "interp q=" + std::to_string(q);
          return false;
        }
      }
      auto rres = oracle_resultant_points(phi, k, 10, root.fork(q).next());
      if (!rres.ok || rres.scalars.size() != 10) {
        d = "resultant q=" + std::to_string(q);
        return false;
      }
      for (int s : rres.scalars)
        if (s != 1 && s != -1) {
          d = "scalar q=" + std::to_string(q);
          return false;
        }
      // planted single-coefficient perturbation must be caught by both
      ModularPoly bad = phi;
      FqPoly c = bad.coeff(1, 1);
      c += FqPoly::one(bad.k);
      bad.set(1, 1, c);
      if (oracle_interpolate(bad, k, root.fork(q + 7000).next()).ok) {
        d = "interp mutation q=" + std::to_string(q);
        return false;
      }
      if (oracle_resultant_points(bad, k, 2, root.fork(q + 8000).next()).ok) {
        d = "resultant mutation q=" + std::to_string(q);
        return false;
      }
    }
    return true;
  });

  criterion(10, "tower-relation [q <= 256]", [](std::string& d) {
    for (uint64_t q : prime_powers_upto(256))
      if (!verify_tower_relation(q)) {
        d = "q=" + std::to_string(q);
        return false;
      }
    return true;
  });

  criterion(11, "determinism [byte-identical reports, lossless JSON]",
            [](std::string& d) {
    fs::path dir = fs::temp_directory_path() / "phit_acceptance";
    fs::create_directories(dir);
    fs::path a = dir / "run_a.txt";
    fs::path b = dir / "run_b.txt";
    std::string base = std::string(PHIT_BIN) +
                       " verify --q 9 --checks all --seed 7 --out ";
    if (std::system((base + a.string()).c_str()) != 0) {
      d = "first run failed";
      return false;
    }
    if (std::system((base + b.string()).c_str()) != 0) {
      d = "second run failed";
      return false;
    }
    std::string ra = slurp(a), rb = slurp(b);
    if (ra.empty() || ra != rb) {
      d = "reports differ";
      return false;
    }
    for (uint64_t q : {2, 9, 16}) {
      const ModularPoly& phi = phi_for(q);
      std::string json = export_phi(phi, ExportFormat::json);
      ModularPoly back = import_phi_json(json);
      if (!(back == phi) || export_phi(back, ExportFormat::json) != json) {
        d = "round trip q=" + std::to_string(q);
        return false;
      }
    }
    return true;
  });

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures;
}
