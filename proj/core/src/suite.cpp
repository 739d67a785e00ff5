#include "coxeter/suite.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

#include "coxeter/cosets.hpp"
#include "coxeter/finite_type.hpp"

namespace coxeter {
namespace {

constexpr std::size_t kKeptFailures = 20;

class Recorder {
 public:
  Recorder(std::string name, std::size_t radius)
      : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
    result_.radius = radius;
  }

  void instance() { ++result_.instances; }
  void fail(std::string message) {
    ++result_.failure_count;
    if (result_.failures.size() < kKeptFailures) result_.failures.push_back(std::move(message));
  }
  void expect(bool ok, const std::string& message) {
    if (!ok) fail(message);
  }

  LemmaResult finish() {
    result_.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
    return std::move(result_);
  }

 private:
  LemmaResult result_;
  std::chrono::steady_clock::time_point start_;
};

/// Calls f on every word of length <= max_len over `rank` letters.
template <class F>
void for_each_word(std::size_t rank, std::size_t max_len, F&& f) {
  Word w;
  f(w);
  for (std::size_t len = 1; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      f(w);
      std::size_t pos = len;
      while (pos > 0 && w[pos - 1] + 1u == rank) w[--pos] = 0;
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }
}

std::vector<GenSet> spherical_subsets(const CoxeterMatrix& m) {
  std::vector<GenSet> out;
  const std::uint64_t limit = std::uint64_t{1} << m.rank();
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    if (is_spherical(m, GenSet(mask))) out.push_back(GenSet(mask));
  return out;
}

}  // namespace

bool SystemReport::passed() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& l) { return l.passed(); });
}

std::string format_word(std::span<const Generator> word, std::span<const std::string> names,
                        char separator) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(separator);
    out += word[i] < names.size() ? names[word[i]] : std::to_string(word[i]);
  }
  return out;
}

LemmaChecker::LemmaChecker(const CoxeterSystem& system, std::vector<std::string> names)
    : system_(system), names_(std::move(names)) {}

const Ball& LemmaChecker::ball(std::size_t radius) const {
  for (const auto& [r, b] : balls_)
    if (r == radius) return b;
  balls_.emplace_back(radius, enumerate_ball(system_.matrix(), radius));
  return balls_.back().second;
}

LemmaResult LemmaChecker::canonical_form(std::size_t radius) const {
  Recorder rec("canonical_form", radius);
  const Ball& b = ball(radius);
  for_each_word(system_.rank(), radius, [&](const Word& w) {
    rec.instance();
    const auto vertex = b.evaluate(w);
    if (!vertex) return rec.fail(fmt(w) + ": oracle walk left the ball");
    const Element reduced = system_.reduce(w);
    rec.expect(reduced == b.element(*vertex),
               fmt(w) + ": reduce gives " + fmt(reduced) + ", oracle " + fmt(b.element(*vertex)));
  });
  for (const Element& e : b.elements()) {
    rec.instance();
    rec.expect(system_.reduce(e.canonical) == e, fmt(e) + ": oracle vertex is not a fixed point");
  }
  return rec.finish();
}

LemmaResult LemmaChecker::braid_invariance(std::size_t radius) const {
  Recorder rec("braid_invariance", radius);
  const CoxeterMatrix& m = system_.matrix();
  for_each_word(system_.rank(), radius, [&](const Word& w) {
    const Element base = system_.reduce(w);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Word moved = w;
      if (w[i] == w[i + 1]) {
        moved.erase(moved.begin() + static_cast<std::ptrdiff_t>(i),
                    moved.begin() + static_cast<std::ptrdiff_t>(i + 2));
      } else {
        const Order ord = m.order(w[i], w[i + 1]);
        if (ord.is_infinite() || i + ord.value() > w.size()) continue;
        bool alternating = true;
        for (std::size_t k = 0; k < ord.value(); ++k)
          alternating = alternating && w[i + k] == w[i + (k % 2)];
        if (!alternating) continue;
        for (std::size_t k = 0; k < ord.value(); ++k) moved[i + k] = w[i + 1 - (k % 2)];
      }
      rec.instance();
      rec.expect(system_.reduce(moved) == base, fmt(w) + " -> " + fmt(moved) + " changes reduce");
    }
  });
  return rec.finish();
}

LemmaResult LemmaChecker::deletion(std::size_t radius) const {
  Recorder rec("deletion", radius);
  for_each_word(system_.rank(), radius, [&](const Word& w) {
    const Element target = system_.reduce(w);
    if (target.length() == w.size()) return;
    rec.instance();
    bool found = false;
    for (std::size_t i = 0; i < w.size() && !found; ++i)
      for (std::size_t j = i + 1; j < w.size() && !found; ++j) {
        Word cut;
        for (std::size_t k = 0; k < w.size(); ++k)
          if (k != i && k != j) cut.push_back(w[k]);
        found = system_.reduce(cut) == target;
      }
    rec.expect(found, fmt(w) + ": no pair deletion preserves the element");
  });
  return rec.finish();
}

LemmaResult LemmaChecker::length_parity(std::size_t radius) const {
  Recorder rec("length_parity", radius);
  const Ball& b = ball(radius);
  for (std::size_t v = 0; v < b.size(); ++v) {
    const Element& w = b.element(v);
    for (Generator s = 0; s < system_.rank(); ++s) {
      rec.instance();
      const auto l = static_cast<long>(w.length());
      const auto right = static_cast<long>(system_.multiply(w, s).length());
      const auto left = static_cast<long>(system_.multiply(s, w).length());
      rec.expect(right == l + 1 || right == l - 1, fmt(w) + "." + fmt(Word{s}) + ": bad length");
      rec.expect(left == l + 1 || left == l - 1, fmt(Word{s}) + "." + fmt(w) + ": bad length");
      if (w.length() < b.radius()) {
        const std::size_t u = b.neighbour(v, s);
        rec.expect(u != Ball::npos &&
                       (b.length(u) == w.length() + 1 || b.length(u) + 1 == w.length()),
                   fmt(w) + ": oracle depth jump along " + fmt(Word{s}));
        rec.expect(u == Ball::npos || static_cast<long>(b.length(u)) == right,
                   fmt(w) + ": oracle and reduce disagree on l(ws)");
      }
    }
  }
  return rec.finish();
}

LemmaResult LemmaChecker::inverse_laws(std::size_t radius) const {
  Recorder rec("inverse_laws", radius);
  for (const Element& w : ball(radius).elements()) {
    rec.instance();
    const Element inv = system_.inverse(w);
    rec.expect(inv.length() == w.length(), fmt(w) + ": l(w^-1) != l(w)");
    rec.expect(system_.inverse(inv) == w, fmt(w) + ": inverse is not an involution");
    rec.expect(system_.multiply(w, inv).is_identity(), fmt(w) + ": w.w^-1 != e");
    rec.expect(system_.right_descents(w) == system_.left_descents(inv),
               fmt(w) + ": right descents differ from left descents of the inverse");
  }
  return rec.finish();
}

LemmaResult LemmaChecker::descents_spherical(std::size_t radius) const {
  Recorder rec("descents_spherical", radius);
  for (const Element& w : ball(radius).elements()) {
    rec.instance();
    const GenSet d = system_.right_descents(w);
    rec.expect(is_spherical(system_.matrix(), d), fmt(w) + ": descent set is not spherical");
    // descent set by definition: l(ws) < l(w)
    for (Generator s = 0; s < system_.rank(); ++s)
      rec.expect(d.contains(s) == (system_.multiply(w, s).length() < w.length()),
                 fmt(w) + ": descent set disagrees with lengths at " + fmt(Word{s}));
  }
  return rec.finish();
}

LemmaResult LemmaChecker::descent_partition(std::size_t radius) const {
  Recorder rec("descent_partition", radius);
  const std::uint64_t limit = std::uint64_t{1} << system_.rank();
  for (const Element& w : ball(radius).elements()) {
    rec.instance();
    std::size_t classes = 0;
    for (std::uint64_t mask = 0; mask < limit; ++mask)
      if (in_descent_class(system_, w, GenSet(mask))) ++classes;
    rec.expect(classes == 1, fmt(w) + ": lies in " + std::to_string(classes) + " classes W^T");
    rec.expect(in_descent_class(system_, w, system_.right_descents(w)),
               fmt(w) + ": not in W^{S(w)}");
  }
  return rec.finish();
}

LemmaResult LemmaChecker::longest_coset(std::size_t radius) const {
  Recorder rec("longest_coset", radius);
  for (GenSet t : spherical_subsets(system_.matrix())) {
    const auto members = t.members();
    const std::vector<Generator> reversed(members.rbegin(), members.rend());
    for (const Element& w : ball(radius).elements()) {
      rec.instance();
      const std::string where = "T=" + fmt(Word(members)) + ", w=" + fmt(w);
      try {
        const Element oracle = longest_in_coset_oracle(system_, t, w);
        const CosetLongest greedy = longest_in_coset(system_, t, w);
        const CosetLongest greedy_rev = longest_in_coset(system_, t, w, reversed);
        rec.expect(greedy.v == oracle, where + ": greedy " + fmt(greedy.v) + " vs oracle " +
                                           fmt(oracle));
        rec.expect(greedy_rev.v == oracle, where + ": greedy depends on scan order");
        rec.expect(system_.in_parabolic(greedy.x, t), where + ": x outside W_T");
        rec.expect(system_.multiply(greedy.x, w) == greedy.v, where + ": x.w != v");
        const Element vw_inv = system_.multiply(oracle, system_.inverse(w));
        rec.expect(oracle.length() == vw_inv.length() + w.length(),
                   where + ": l(v) != l(vw^-1) + l(w)");
        for (const Element& u : coset_elements(system_, t, w)) {
          const bool top = t.subset_of(system_.left_descents(u));
          rec.expect(top == (u == oracle),
                     where + ": left-descent test misclassifies " + fmt(u));
        }
      } catch (const std::exception& e) {
        rec.fail(where + ": " + e.what());
      }
    }
  }
  return rec.finish();
}

LemmaResult LemmaChecker::coset_step_agreement(std::size_t radius) const {
  Recorder rec("coset_step", radius);
  for (GenSet t : spherical_subsets(system_.matrix())) {
    const Word members = t.members();
    for (const Element& w : ball(radius).elements()) {
      const GenSet descents = system_.right_descents(w);
      for (Generator s = 0; s < system_.rank(); ++s) {
        if (descents.contains(s)) continue;
        rec.instance();
        const std::string where =
            "T=" + fmt(members) + ", w=" + fmt(w) + ", s=" + fmt(Word{s});
        try {
          const Element x = longest_in_coset(system_, t, w).x;
          const StepOutcome out = coset_step(system_, t, w, s, x);
          const Element fresh = longest_in_coset(system_, t, system_.multiply(w, s)).x;
          rec.expect(out.x_next == fresh,
                     where + ": step gives " + fmt(out.x_next) + ", recomputation " + fmt(fresh));
          rec.expect(out.x_next.length() <= x.length(), where + ": l(x') > l(x)");
          if (out.unchanged()) {
            rec.expect(out.x_next == x, where + ": Unchanged but x' != x");
          } else {
            Word cut = x.canonical;
            const std::size_t i = *out.deleted_position;
            rec.expect(i < cut.size(), where + ": deletion index out of range");
            if (i < cut.size()) cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(i));
            rec.expect(system_.reduce(cut) == out.x_next && out.x_next.length() + 1 == x.length(),
                       where + ": x' is not x with one letter deleted");
          }
        } catch (const std::exception& e) {
          rec.fail(where + ": " + e.what());
        }
      }
    }
  }
  return rec.finish();
}

LemmaResult LemmaChecker::descent_collapse(std::size_t radius) const {
  Recorder rec("descent_collapse", radius);
  for (const Element& w : ball(radius).elements())
    for (Generator s0 = 0; s0 < system_.rank(); ++s0) {
      const DescentCollapse out = check_descent_collapse(system_, w, s0);
      if (!out.hypothesis_ok) continue;
      rec.instance();
      rec.expect(out.conclusion_ok,
                 "w=" + fmt(w) + ", s0=" + fmt(Word{s0}) + ": S(ws0) != {s0}");
    }
  return rec.finish();
}

LemmaResult LemmaChecker::parabolic_orders(std::size_t radius, std::size_t max_order) const {
  Recorder rec("parabolic_orders", radius);
  const CoxeterMatrix& m = system_.matrix();
  const std::uint64_t limit = std::uint64_t{1} << m.rank();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const GenSet t(mask);
    const SphericalVerdict verdict = classify(m, t);
    const std::string where = "T=" + fmt(Word(t.members()));
    if (verdict.spherical) {
      if (*verdict.order > max_order) continue;
      rec.instance();
      const std::size_t counted = parabolic_elements(m, t).size();
      rec.expect(GroupOrder(counted) == *verdict.order,
                 where + ": enumerated " + std::to_string(counted) + " elements, catalogue " +
                     verdict.order->str());
    } else {
      rec.instance();
      const auto levels = enumerate_ball(m.restrict_to(t), radius).level_sizes();
      const bool grows = levels.size() == radius + 1 &&
                         std::all_of(levels.begin(), levels.end(), [](std::size_t c) { return c > 0; });
      rec.expect(grows, where + ": non-spherical subgroup stopped growing");
    }
  }
  return rec.finish();
}

SystemReport LemmaChecker::run_all(const std::string& system_name, std::size_t radius) const {
  SystemReport report;
  report.system = system_name;
  report.ball_size = ball(radius).size();
  report.lemmas.push_back(canonical_form(radius));
  report.lemmas.push_back(braid_invariance(radius));
  report.lemmas.push_back(deletion(radius));
  report.lemmas.push_back(length_parity(radius));
  report.lemmas.push_back(inverse_laws(radius));
  report.lemmas.push_back(descents_spherical(radius));
  report.lemmas.push_back(descent_partition(radius));
  report.lemmas.push_back(longest_coset(radius));
  report.lemmas.push_back(coset_step_agreement(radius));
  report.lemmas.push_back(descent_collapse(radius));
  report.lemmas.push_back(parabolic_orders(radius));
  return report;
}

}  // namespace coxeter
