// Acceptance suite: runs every gate criterion at its stated tolerance
// (exact equality throughout) and prints one pass/fail line per criterion.
// Returns the number of failed criteria.
//
// The CLI contract criterion drives the installed binary; its path comes
// from the QCP2_CLI environment variable (set by CTest), with a fallback
// relative to the build tree.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcp2/verify.hpp"

using namespace qcp2;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int number;
  std::string label;
  std::function<void(std::vector<std::string>&)> run;  // push failure notes
  double budget_seconds = 0;  // 0 = untimed
};

void expect(std::vector<std::string>& notes, bool ok, const std::string& what) {
  if (!ok) notes.push_back(what);
}

void expect_eq(std::vector<std::string>& notes, const Rational& got,
               const Rational& want, const std::string& what) {
  if (got != want)
    notes.push_back(what + ": got " + got.str() + ", want " + want.str());
}

// ---- criterion 8 helper: the c = 0 restriction of the recursion,
// re-implemented directly (two-index splitting of points and lines).
Rational restricted_point_line_recursion(int d, int a, int b,
                                         const CharNumEngine& eng) {
  if (a <= 2) return eng.value({d, a, b, 0});
  Rational total(0);
  for (int d1 = 1; d1 < d; ++d1) {
    const long d2 = d - d1;
    // splitting with one point condition used up
    for (long a1 = 0; a1 <= a - 1; ++a1)
      for (long b1 = 0; b1 <= b; ++b1) {
        const CharKey k1{d1, (int)a1, (int)b1, 0};
        const CharKey k2{(int)d2, (int)(a - 1 - a1), (int)(b - b1), 0};
        if (!k1.dimension_ok() || !k2.dimension_ok()) continue;
        const Rational bracket =
            Rational(d1 * d1 * d2 * d2) * binomial(a - 3, a1 - 1) -
            Rational(d1 * d1 * d1 * d2) * binomial(a - 3, a1);
        total += bracket * binomial(b, b1) * eng.value(k1) * eng.value(k2);
      }
    // splittings with one or two line conditions used up
    for (long a1 = 0; a1 <= a; ++a1)
      for (long b1 = 0; b1 + 1 <= b; ++b1) {
        const CharKey k1{d1, (int)a1, (int)b1, 0};
        const CharKey k2{(int)d2, (int)(a - a1), (int)(b - 1 - b1), 0};
        if (!k1.dimension_ok() || !k2.dimension_ok()) continue;
        const Rational bracket =
            Rational(d1 * d1 * d2) * binomial(a - 3, a1 - 1) -
            Rational(d1 * d1 * d1) * binomial(a - 3, a1);
        const long parts[] = {b1, b - 1 - b1, 1};
        total += Rational(2) * bracket * multinomial(b, parts) *
                 eng.value(k1) * eng.value(k2);
      }
    for (long a1 = 0; a1 + 1 <= a + 1; ++a1)
      for (long b1 = 0; b1 + 2 <= b; ++b1) {
        const CharKey k1{d1, (int)a1, (int)b1, 0};
        const CharKey k2{(int)d2, (int)(a + 1 - a1), (int)(b - 2 - b1), 0};
        if (!k1.dimension_ok() || !k2.dimension_ok()) continue;
        const Rational bracket =
            Rational(d1 * d2) * binomial(a - 3, a1 - 2) -
            Rational(d1 * d1) * binomial(a - 3, a1 - 1);
        const long parts[] = {b1, b - 2 - b1, 2};
        total += Rational(4) * bracket * multinomial(b, parts) *
                 eng.value(k1) * eng.value(k2);
      }
  }
  return total;
}

// ---- criterion 10 helper: run the CLI and capture stdout + exit code.
struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const char* env = std::getenv("QCP2_CLI");
  const std::string cli = env ? env : "../tools/qcp2";
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[512];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<CharKey> oracle_keys(const CharNumEngine& eng) {
  // every determinable key with a >= 3: degree <= 4 with c = 0, and
  // degree <= 2 with any c (candidates the shipped store cannot support
  // are excluded by the determinability filter, not by hand)
  std::vector<CharKey> keys;
  auto add_if_determinable = [&](const CharKey& key) {
    if (eng.try_value(key).determinable()) keys.push_back(key);
  };
  for (int d = 2; d <= 4; ++d)
    for (int a = 3; a <= 3 * d - 1; ++a)
      add_if_determinable({d, a, 3 * d - 1 - a, 0});
  for (int c = 1; 2 * c <= 5 - 3; ++c)
    for (int a = 3; a + 2 * c <= 5; ++a)
      add_if_determinable({2, a, 5 - a - 2 * c, c});
  return keys;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "point-counts chain, recursion vs direct formula",
                      [](std::vector<std::string>& notes) {
    CharNumEngine eng(default_base());
    const Rational expect_chain[] = {Rational(1), Rational(1), Rational(12),
                                     Rational(620), Rational(87304)};
    for (int d = 1; d <= 5; ++d) {
      expect_eq(notes, eng.value({d, 3 * d - 1, 0, 0}), expect_chain[d - 1],
                "recursion N_" + std::to_string(d));
      expect_eq(notes, kontsevich_direct(d), expect_chain[d - 1],
                "direct N_" + std::to_string(d));
    }
  }, 1.0});

  criteria.push_back({2, "conic numbers from degree-1 data only",
                      [](std::vector<std::string>& notes) {
    BaseStore lines;
    lines.put({1, 2, 0, 0}, Rational(1), "");
    lines.put({1, 1, 1, 0}, Rational(0), "");
    lines.put({1, 0, 2, 0}, Rational(0), "");
    lines.put({1, 0, 0, 1}, Rational(1), "");
    CharNumEngine eng(lines);
    expect_eq(notes, eng.value({2, 5, 0, 0}), Rational(1), "N_2(5,0,0)");
    expect_eq(notes, eng.value({2, 4, 1, 0}), Rational(2), "N_2(4,1,0)");
    expect_eq(notes, eng.value({2, 3, 2, 0}), Rational(4), "N_2(3,2,0)");
    expect_eq(notes, eng.value({2, 3, 0, 1}), Rational(1), "N_2(3,0,1)");
  }});

  criteria.push_back({3, "differential-equation oracle equals the recursion",
                      [](std::vector<std::string>& notes) {
    CharNumEngine eng(default_base());
    const std::vector<CharKey> keys = oracle_keys(eng);
    expect(notes, keys.size() >= 15, "determinable key set is too small");
    for (const CharKey& key : keys) {
      try {
        expect_eq(notes, pde_extract_charnum(key, eng), eng.value(key),
                  "oracle at " + key.str());
      } catch (const MissingBaseData& e) {
        notes.push_back("oracle blocked at determinable key " + key.str() +
                        ": " + e.what());
      }
    }
  }, 60.0});

  criteria.push_back({4, "contact associativity at order 5 (all "
                         "determinable coefficients)",
                      [](std::vector<std::string>& notes) {
    CharNumEngine eng(default_base());
    const Report r = verify_contact_associativity(5, eng);
    expect(notes, r.pass, "verifier reported failures");
    expect(notes, r.checked > 0, "nothing was checkable");
    for (const auto& f : r.failures)
      notes.push_back("residual at " + f.monomial + ": " + f.lhs +
                      " vs " + f.rhs);
  }, 300.0});

  criteria.push_back({5, "closure: the contact potential never leaves the "
                         "plane's span",
                      [](std::vector<std::string>& notes) {
    CharNumEngine eng(default_base());
    const ContactAlgebra algebra(6, eng);
    const ContactPotential& k = algebra.contact_potential();
    for (const auto& [mono, coeff] : k.full.known().terms()) {
      expect(notes, mono.exponent(Var::z0) == 0 &&
                        mono.exponent(Var::z1) == 0 &&
                        mono.exponent(Var::z2) == 0,
             "z0/z1/z2 monomial present: " + mono.str());
      expect(notes, mono.degree_in_z() == 1,
             "non-linear z monomial: " + mono.str());
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int kk = 0; kk <= 2; ++kk) {
          const MaskedSeries& s = algebra.kp(i, j, kk);
          expect(notes, s.known().is_zero() && s.fully_known(),
                 "structure constant (" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(kk) +
                     ") is not identically zero");
        }
  }});

  criteria.push_back({6, "quantum associativity at T-order 6, four "
                         "deformation directions",
                      [](std::vector<std::string>& notes) {
    const ClassP2 deltas[] = {ClassP2::zero(), ClassP2::h(), ClassP2::h2(),
                              ClassP2::h() + ClassP2::h2()};
    for (const ClassP2& delta : deltas) {
      const Report r = verify_quantum_associativity(6, delta);
      expect(notes, r.pass && r.checked > 0,
             "failed for delta = " + delta.str());
    }
  }});

  criteria.push_back({7, "incidence-variety cohomology invariants",
                      [](std::vector<std::string>& notes) {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        expect(notes,
               integrate_i(cup_i(ClassI::basis(i), ClassI::basis(j))) ==
                   Rational(i + j == 5 ? 1 : 0),
               "pairing at (" + std::to_string(i) + "," + std::to_string(j) +
                   ")");
    for (int i = 0; i < 6; ++i)
      expect(notes, diagonal_decompose(ClassI::basis(i)) == ClassI::basis(i),
             "diagonal reconstruction of basis " + std::to_string(i));
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    for (int rep = 0; rep < 100; ++rep) {
      ClassI x;
      for (int i = 0; i < 6; ++i) x.t[i] = Rational(num(rng), den(rng));
      expect(notes, diagonal_decompose(x) == x,
             "diagonal reconstruction of a random class");
    }
    for (int i = 0; i < 3; ++i) {
      expect(notes, pushforward_p(pullback_p(ClassP2::basis(i))).is_zero(),
             "p_* p^* != 0");
      expect(notes, pushforward_p(ClassI::basis(i)).is_zero(),
             "p_* nonzero on the pulled-back span");
      expect(notes, pushforward_p(ClassI::basis(3 + i)) == ClassP2::basis(i),
             "p_* wrong on the fiber span");
    }
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
          expect(notes,
                 cup_i(cup_i(ClassI::basis(i), ClassI::basis(j)),
                       ClassI::basis(k)) ==
                     cup_i(ClassI::basis(i),
                           cup_i(ClassI::basis(j), ClassI::basis(k))),
                 "cup associativity fails on a basis triple");
  }});

  criteria.push_back({8, "classical specializations of the equation and "
                         "recursion",
                      [](std::vector<std::string>& notes) {
    CharNumEngine eng(default_base());
    // the two classical slices of the differential equation
    const Report di = verify_pde(6, eng, PdeRestriction::no_y3_y5);
    expect(notes, di.pass && di.checked > 0, "point/line slice failed");
    const Report km = verify_pde(6, eng, PdeRestriction::no_y3_y4_y5);
    expect(notes, km.pass && km.checked > 0, "point slice failed");
    // the c = 0 restriction of the recursion reproduces criteria 1 and 2
    const Rational chain[] = {Rational(1), Rational(1), Rational(12),
                              Rational(620), Rational(87304)};
    for (int d = 1; d <= 5; ++d)
      expect_eq(notes, restricted_point_line_recursion(d, 3 * d - 1, 0, eng),
                chain[d - 1], "restricted recursion at degree " +
                std::to_string(d));
    const int conic[] = {1, 2, 4};
    for (int a = 5; a >= 3; --a)
      expect_eq(notes, restricted_point_line_recursion(2, a, 5 - a, eng),
                Rational(conic[5 - a]), "restricted conic numbers");
  }});

  criteria.push_back({9, "ring presentation: origin values and the cubic "
                         "relation to order 4",
                      [](std::vector<std::string>& notes) {
    CharNumEngine eng(default_base());
    const RingPresentation xi = ring_presentation(7, eng);
    expect_eq(notes, xi.xi0.coefficient(Monomial::unit()), Rational(1),
              "xi0 at the origin");
    expect_eq(notes, xi.xi1.coefficient(Monomial::unit()), Rational(0),
              "xi1 at the origin");
    expect_eq(notes, xi.xi2.coefficient(Monomial::unit()), Rational(0),
              "xi2 at the origin");
    const Report r = verify_presentation(7, eng);  // compares to order 4
    expect(notes, r.order == 4, "comparison order is not 4");
    expect(notes, r.pass, "cubic relation residual is nonzero");
    expect(notes, r.checked > 0, "nothing was checkable");
  }});

  criteria.push_back({10, "failure-mode contract: exit codes and "
                          "single-cell corruption drills",
                      [](std::vector<std::string>& notes) {
    // (a) the CLI names exactly the missing key and exits with code 2
    const CliResult res = run_cli("charnum --d 3 --a 2 --b 6 --c 0");
    expect(notes, res.exit_code == 2,
           "exit code " + std::to_string(res.exit_code) + ", want 2");
    try {
      const auto j = nlohmann::json::parse(res.output);
      expect(notes, j["error"] == "missing-base-data", "wrong error kind");
      expect(notes, j["missing"].size() == 1, "expected exactly one key");
      expect(notes,
             j["missing"][0]["d"] == 3 && j["missing"][0]["a"] == 2 &&
                 j["missing"][0]["b"] == 6 && j["missing"][0]["c"] == 0,
             "wrong missing key");
    } catch (const std::exception& e) {
      notes.push_back(std::string("CLI output is not the expected JSON: ") +
                      e.what());
    }

    // (b) corrupting any single evaluation cell must be caught by the
    // oracle equality (criterion 3) or the associativity verifier
    // (criterion 4) with a located coefficient
    struct Drill {
      CharKey key;
      Rational wrong;
    };
    const Drill drills[] = {{{2, 5, 0, 0}, Rational(2)},
                            {{3, 8, 0, 0}, Rational(13)},
                            {{2, 3, 0, 1}, Rational(2)}};
    for (const Drill& drill : drills) {
      CharNumEngine corrupted(default_base(), {{drill.key, drill.wrong}});
      const bool oracle_catches =
          pde_extract_charnum(drill.key, corrupted) !=
          corrupted.value(drill.key);
      const Report r = verify_contact_associativity(5, corrupted);
      const bool assoc_catches = !r.pass && !r.failures.empty();
      expect(notes, oracle_catches || assoc_catches,
             "corruption at " + drill.key.str() + " went undetected");
    }
  }});

  int failed = 0;
  for (const auto& criterion : criteria) {
    std::vector<std::string> notes;
    const auto start = Clock::now();
    try {
      criterion.run(notes);
    } catch (const std::exception& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      std::ostringstream os;
      os << "exceeded the " << criterion.budget_seconds << " s budget ("
         << seconds << " s)";
      notes.push_back(os.str());
    }
    const bool pass = notes.empty();
    failed += pass ? 0 : 1;
    std::printf("criterion %2d: %s — %s (%.2f s)\n", criterion.number,
                pass ? "PASS" : "FAIL", criterion.label.c_str(), seconds);
    for (const auto& note : notes) std::printf("    %s\n", note.c_str());
  }
  return failed;
}
