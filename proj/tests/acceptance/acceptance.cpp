// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "oracle.hpp"
#include "sqstable/cli/command.hpp"
#include "sqstable/element.hpp"
#include "sqstable/predicates.hpp"
#include "sqstable/structure.hpp"
#include "sqstable/theorems.hpp"

namespace {

using namespace sqs;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    if (pass) note = what;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (o.pass && seconds > limit_seconds) {
    o.pass = false;
    o.note = "took longer than " + std::to_string(limit_seconds) + " s";
  }
  if (!o.pass) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds);
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << timing << ")";
  if (!o.note.empty()) std::cout << ": " << o.note;
  std::cout << std::endl;
}

oracle::Set names_to_set(const Ring& r, std::initializer_list<const char*> names) {
  oracle::Set s;
  for (const char* n : names) s.insert(r.element(n));
  return s;
}

oracle::Set as_set(const Ideal& i) {
  const auto m = i.elements();
  return {m.begin(), m.end()};
}

std::string verify_json(unsigned threads) {
  std::ostringstream out, err;
  const int status = cli::main_entry(
      {"verify", "all", "--corpus", "default", "--format", "json", "--threads", std::to_string(threads)}, out, err);
  if (status != 0) throw std::runtime_error("verify exited with " + std::to_string(status) + ": " + err.str());
  return out.str();
}

}  // namespace

int main() {
  const auto& corpus = oracle::corpus();

  criterion(1, "ring axioms hold on the default corpus and corruption is detected", 10.0, [&] {
    Outcome o;
    o.require(corpus.size() >= 25, "corpus has only " + std::to_string(corpus.size()) + " rings");
    for (const Ring& r : corpus) o.require(verify_axioms(r).ok(), r.expression() + " violates an axiom");
    std::size_t detected = 0, injected = 0;
    for (const Ring& r : corpus) {
      if (r.size() < 2) continue;
      const std::size_t n = r.size();
      for (std::size_t cell : {std::size_t{0}, n * n / 3, n * n - 1}) {
        for (bool mul : {false, true}) {
          RingTables t = r.tables();
          auto& table = mul ? t.mul : t.add;
          table[cell] = (table[cell] + 1) % n;
          ++injected;
          detected += !verify_axioms(Ring(std::move(t), r.provenance())).ok();
        }
      }
    }
    o.require(detected == injected, std::to_string(injected - detected) + " corruptions missed");
    o.note = std::to_string(corpus.size()) + " rings, " + std::to_string(detected) + "/" + std::to_string(injected) +
             " corruptions detected";
    return o;
  });

  criterion(2, "structure facts: radicals, unit counts, ideals of Z_6", 1.0, [&] {
    Outcome o;
    const Ring z4 = make_cyclic(4);
    o.require(as_set(jacobson_radical(z4)) == names_to_set(z4, {"0", "2"}), "J(Z_4)");
    const Ring m = make_matrix(2, make_cyclic(2));
    o.require(as_set(jacobson_radical(m)) == names_to_set(m, {"[0,0,0,0]"}), "J(M_2(Z_2))");
    const Ring t = make_triangular(2, make_cyclic(2));
    o.require(as_set(jacobson_radical(t)) == names_to_set(t, {"[0,0,0,0]", "[0,1,0,0]"}), "J(T_2(Z_2))");
    for (std::size_t n = 1; n <= 12; ++n)
      o.require(units(make_cyclic(n)).count() == oracle::phi(n), "|U(Z_" + std::to_string(n) + ")|");
    o.require(all_ideals(make_cyclic(6)).size() == 4, "ideals of Z_6");
    return o;
  });

  criterion(3, "square stability: definition, fast form and matrix form agree", 120.0, [&] {
    Outcome o;
    std::size_t pairs = 0, matrix_pairs = 0;
    for (const Ring& r : corpus) {
      const bool matrix = is_commutative(r) && r.size() * r.size() * r.size() * r.size() <= 4096;
      for (const Ideal& i : all_ideals(r)) {
        ++pairs;
        const bool fast = is_square_stable_fast(r, i).holds;
        o.require(is_square_stable_def(r, i).holds == fast, "def/fast disagree on " + r.expression());
        if (matrix) {
          ++matrix_pairs;
          o.require(is_square_stable_matrix(r, i).holds == fast, "matrix/fast disagree on " + r.expression());
        }
      }
    }
    if (o.pass)
      o.note = std::to_string(pairs) + " (ring, ideal) pairs, " + std::to_string(matrix_pairs) + " with matrix form";
    return o;
  });

  criterion(4, "radical ideals, M_2(Z_2) counterexample, cyclic-ring regular SS ideal", 60.0, [&] {
    Outcome o;
    for (const Ring& r : corpus) {
      const Ideal& radical = jacobson_radical(r);
      for (const Ideal& i : all_ideals(r)) {
        if (!i.is_subset_of(radical)) continue;
        o.require(is_square_stable_fast(r, i).holds, "(a) not square stable in " + r.expression());
        o.require(is_exchange_ideal(r, i).combined.holds, "(a) not exchange in " + r.expression());
      }
    }
    const Ring m = make_matrix(2, make_cyclic(2));
    const Ideal all = full_ideal(m);
    o.require(is_regular_ideal(m, all).holds, "(b) M_2(Z_2) not regular");
    o.require(!is_reduced_ideal(m, all).holds, "(b) M_2(Z_2) reduced");
    const PredicateResult ss = is_square_stable_fast(m, all);
    o.require(!ss.holds, "(b) M_2(Z_2) square stable");
    o.require(ss.witness.size() == 2 && ss.witness[0].role == "a" && m.name(ss.witness[0].element) == "[0,1,0,0]" &&
                  ss.witness[1].role == "r" && m.name(ss.witness[1].element) == "[0,0,1,0]",
              "(b) counterexample is not (a = e12, r = e21)");
    for (std::size_t n : {3, 5, 6, 7}) {
      const TheoremVerdict v = verify_example41(n);
      o.require(v.hypotheses_hold && v.consistent && !v.witness.empty(),
                "(c) no witness for n = " + std::to_string(n));
    }
    return o;
  });

  criterion(5, "theorem suite consistent, every id exercised both ways", 300.0, [&] {
    Outcome o;
    const auto exprs = default_corpus();
    CorpusOptions options;
    options.threads = std::max(1u, std::thread::hardware_concurrency());
    const CorpusReport report = run_corpus(exprs, instance_theorems(), options);
    o.require(report.errors.empty(), "corpus errors");
    o.require(report.tallies.size() == 12, "expected 12 theorem ids");
    for (const auto& [id, t] : report.tallies) {
      const std::string name(to_string(id));
      o.require(t.inconsistent == 0, name + " inconsistent");
      o.require(t.nonvacuous_true > 0, name + " has no non-vacuous true instance");
      o.require(t.clause_false > 0, name + " has no clause-false instance");
    }
    if (o.pass) o.note = std::to_string(report.records.size()) + " verdicts, 0 inconsistent";
    return o;
  });

  criterion(6, "element chain: strongly regular => unit-regular => regular, regular <=> unit-regular", 60.0, [&] {
    Outcome o;
    for (const Ring& r : corpus)
      for (const ElementProfile& p : classify_all(r)) {
        const std::string at = r.expression() + " " + r.name(p.element);
        o.require(!p.is_strongly_regular() || p.is_unit_regular(), "strongly regular, not unit-regular: " + at);
        o.require(!p.is_unit_regular() || p.is_regular(), "unit-regular, not regular: " + at);
        o.require(p.is_regular() == p.is_unit_regular(), "regular != unit-regular: " + at);
      }
    const Ring m = make_matrix(2, make_cyclic(2));
    const ElementProfile e12 = classify(m, m.element("[0,1,0,0]"));
    o.require(e12.is_unit_regular() && !e12.is_strongly_regular(), "e12 in M_2(Z_2)");
    return o;
  });

  criterion(7, "Dedekind-finite and right-invertible => unit on every corpus ring", 60.0, [&] {
    Outcome o;
    for (const Ring& r : corpus) {
      o.require(is_dedekind_finite(r), r.expression() + " not Dedekind-finite");
      o.require(!right_inverse_not_unit(r).has_value(), r.expression() + " has a one-sided unit");
      for (Element a = 0; a < r.size(); ++a)
        if (oracle::has_right_inverse(r, a)) o.require(oracle::is_unit(r, a), r.expression() + " " + r.name(a));
    }
    return o;
  });

  criterion(8, "verify all --format json is byte-identical across thread counts", 120.0, [&] {
    Outcome o;
    const std::string one = verify_json(1);
    const std::string four = verify_json(4);
    o.require(!one.empty(), "empty report");
    o.require(one == four, "reports differ between --threads 1 and --threads 4");
    if (o.pass) o.note = std::to_string(one.size()) + " bytes";
    return o;
  });

  return failures;
}
