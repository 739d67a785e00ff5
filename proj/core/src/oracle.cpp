#include "coxeter/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coxeter/error.hpp"
#include "coxeter/finite_type.hpp"

namespace coxeter {
namespace {

/// Braid class of a reduced word, as a sorted set. Kept separate from the
/// reducer's closure so the two can be checked against each other.
std::set<Word> braid_class(const Word& start, const CoxeterMatrix& matrix, std::size_t budget) {
  std::set<Word> cls{start};
  std::vector<Word> frontier{start};
  while (!frontier.empty()) {
    Word w = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Generator a = w[i], b = w[i + 1];
      if (a == b) continue;
      const Order m = matrix.order(a, b);
      if (m.is_infinite() || i + m.value() > w.size()) continue;
      const std::size_t len = m.value();
      bool matches = true;
      for (std::size_t k = 0; k < len && matches; ++k) matches = w[i + k] == (k % 2 ? b : a);
      if (!matches) continue;
      Word moved = w;
      for (std::size_t k = 0; k < len; ++k) moved[i + k] = k % 2 ? a : b;
      if (cls.insert(moved).second) {
        if (cls.size() > budget)
          throw Error(ErrorKind::SizeBudgetExceeded, "reduced-word class outgrew the budget");
        frontier.push_back(std::move(moved));
      }
    }
  }
  return cls;
}

struct Vertex {
  std::set<Word> words;
  GenSet last_letters;
  std::vector<std::size_t> next;  // by generator; npos if unknown
};

}  // namespace

std::vector<std::size_t> Ball::level_sizes() const {
  std::vector<std::size_t> sizes(radius_ + 1, 0);
  for (const auto& e : elements_)
    if (e.length() <= radius_) ++sizes[e.length()];
  return sizes;
}

std::optional<std::size_t> Ball::find(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Ball::evaluate(std::span<const Generator> word) const {
  std::size_t v = 0;
  for (Generator s : word) {
    if (s >= rank_) return std::nullopt;
    v = neighbour(v, s);
    if (v == npos) return std::nullopt;
  }
  return v;
}

Ball enumerate_ball(const CoxeterMatrix& matrix, std::optional<std::size_t> radius,
                    OracleOptions options) {
  const std::size_t n = matrix.rank();
  std::vector<Vertex> vertices(1);
  vertices[0].words.insert(Word{});
  vertices[0].next.assign(n, Ball::npos);
  std::map<Word, std::size_t> word_index{{Word{}, 0}};
  std::vector<std::vector<std::size_t>> levels{{0}};
  std::size_t stored = 1;
  bool complete = false;

  for (std::size_t depth = 0; !radius || depth < *radius; ++depth) {
    std::vector<std::size_t> upper;
    for (std::size_t v : levels[depth]) {
      for (Generator s = 0; s < n; ++s) {
        if (vertices[v].last_letters.contains(s)) {
          // some reduced word ends in s: ws sits one level down
          auto it = std::find_if(vertices[v].words.begin(), vertices[v].words.end(),
                                 [&](const Word& w) { return w.back() == s; });
          const Word prefix(it->begin(), it->end() - 1);
          vertices[v].next[s] = word_index.at(prefix);
          continue;
        }
        Word extended = *vertices[v].words.begin();
        extended.push_back(s);
        if (auto it = word_index.find(extended); it != word_index.end()) {
          vertices[v].next[s] = it->second;
          continue;
        }
        Vertex fresh;
        fresh.words = braid_class(extended, matrix, options.size_budget);
        fresh.next.assign(n, Ball::npos);
        stored += fresh.words.size();
        if (stored > options.size_budget)
          throw Error(ErrorKind::SizeBudgetExceeded,
                      "ball enumeration stored more than " + std::to_string(options.size_budget) +
                          " reduced words");
        const std::size_t id = vertices.size();
        for (const Word& w : fresh.words) {
          for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == w[i + 1])
              throw std::logic_error("oracle: braid class of an ascent contains a square");
          fresh.last_letters.insert(w.back());
          word_index.emplace(w, id);
        }
        vertices.push_back(std::move(fresh));
        vertices[v].next[s] = id;
        upper.push_back(id);
      }
    }
    if (upper.empty()) {
      complete = true;
      break;
    }
    levels.push_back(std::move(upper));
  }

  // the top level's downward edges are needed for evaluate(); fill them
  for (std::size_t v : levels.back())
    for (Generator s = 0; s < n; ++s)
      if (vertices[v].last_letters.contains(s)) {
        auto it = std::find_if(vertices[v].words.begin(), vertices[v].words.end(),
                               [&](const Word& w) { return w.back() == s; });
        vertices[v].next[s] = word_index.at(Word(it->begin(), it->end() - 1));
      }

  // renumber by (length, ShortLex canonical)
  std::vector<std::size_t> order(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return shortlex_less(*vertices[a].words.begin(), *vertices[b].words.begin());
  });
  std::vector<std::size_t> renumber(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = i;

  Ball ball;
  ball.rank_ = n;
  ball.radius_ = levels.size() - 1;
  ball.complete_ = complete;
  ball.edges_.assign(vertices.size() * n, Ball::npos);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex& vx = vertices[order[i]];
    // std::set<Word> sorts lexicographically and all words share a length,
    // so begin() is the ShortLex-least one
    ball.elements_.push_back(Element{*vx.words.begin()});
    ball.index_.emplace(ball.elements_.back(), i);
    for (Generator s = 0; s < n; ++s)
      if (vx.next[s] != Ball::npos) ball.edges_[i * n + s] = renumber[vx.next[s]];
  }
  return ball;
}

std::vector<Element> parabolic_elements(const CoxeterMatrix& matrix, GenSet subset,
                                        OracleOptions options) {
  if (!is_spherical(matrix, subset))
    throw Error(ErrorKind::NonSphericalSubset, "W_T is infinite");
  const auto members = subset.members();
  const Ball local = enumerate_ball(matrix.restrict_to(subset), std::nullopt, options);
  // renumbering preserves generator order, hence ShortLex minimality
  std::vector<Element> out;
  out.reserve(local.size());
  for (const Element& e : local.elements()) {
    Element mapped;
    for (Generator g : e.canonical) mapped.canonical.push_back(members[g]);
    out.push_back(std::move(mapped));
  }
  return out;
}

std::vector<Element> coset_elements(const CoxeterSystem& system, GenSet subset, const Element& w) {
  std::vector<Element> coset;
  for (const Element& x : parabolic_elements(system.matrix(), subset))
    coset.push_back(system.multiply(x, w));
  std::sort(coset.begin(), coset.end());
  if (std::adjacent_find(coset.begin(), coset.end()) != coset.end())
    throw std::logic_error("oracle: coset listing has a repeated element");
  return coset;
}

Element longest_in_coset_oracle(const CoxeterSystem& system, GenSet subset, const Element& w) {
  const auto coset = coset_elements(system, subset, w);
  // ShortLex sorted: the longest elements are at the back
  const std::size_t top = coset.back().length();
  if (coset.size() >= 2 && coset[coset.size() - 2].length() == top)
    throw Error(ErrorKind::NonUniqueMaximum,
                "two elements of length " + std::to_string(top) + " in the coset");
  return coset.back();
}

}  // namespace coxeter
