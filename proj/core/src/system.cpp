#include "coxeter/system.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "coxeter/error.hpp"

namespace coxeter {
namespace {

// Words are packed one generator per byte; std::string gives cheap hashing.
std::string pack(std::span<const Generator> word) { return std::string(word.begin(), word.end()); }

Element unpack(const std::string& s) {
  Element e;
  e.canonical.reserve(s.size());
  for (char c : s) e.canonical.push_back(static_cast<Generator>(c));
  return e;
}

bool packed_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // compare as unsigned bytes
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
}

/// Breadth-first saturation of the braid-move class of `start`. `visit` is
/// called once per distinct word and may return true to stop early.
template <class Visit>
void saturate(const std::string& start, const std::vector<std::uint32_t>& orders, std::size_t rank,
              std::size_t budget, std::unordered_set<std::string>& seen, Visit&& visit) {
  std::vector<std::string> queue{start};
  seen.insert(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::string word = queue[head];
    if (visit(word)) return;
    const std::size_t len = word.size();
    for (std::size_t i = 0; i + 1 < len; ++i) {
      const auto a = static_cast<unsigned char>(word[i]);
      const auto b = static_cast<unsigned char>(word[i + 1]);
      if (a == b) continue;
      const std::uint32_t m = orders[a * rank + b];
      if (m == 0 || i + m > len) continue;
      bool alternating = true;
      for (std::size_t k = 2; k < m && alternating; ++k)
        alternating = static_cast<unsigned char>(word[i + k]) == (k % 2 == 0 ? a : b);
      if (!alternating) continue;
      std::string next = word;
      for (std::size_t k = 0; k < m; ++k) next[i + k] = static_cast<char>(k % 2 == 0 ? b : a);
      if (seen.insert(next).second) {
        if (seen.size() > budget)
          throw Error(ErrorKind::ClosureBudgetExceeded,
                      "braid closure exceeded " + std::to_string(budget) + " words");
        queue.push_back(std::move(next));
      }
    }
  }
}

std::optional<std::size_t> adjacent_pair(const std::string& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] == word[i + 1]) return i;
  return std::nullopt;
}

}  // namespace

struct CoxeterSystem::Cache {
  std::mutex mutex;
  std::unordered_map<std::string, std::string> steps;  // prefix + letter -> canonical
  std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>> descents;

  template <class Map, class Value>
  void store(Map& map, const std::string& key, Value&& value, std::size_t capacity) {
    if (capacity == 0) return;
    std::lock_guard lock(mutex);
    if (map.size() >= capacity) map.clear();
    map.emplace(key, std::forward<Value>(value));
  }

  template <class Map>
  auto find(Map& map, const std::string& key) -> std::optional<typename Map::mapped_type> {
    std::lock_guard lock(mutex);
    auto it = map.find(key);
    if (it == map.end()) return std::nullopt;
    return it->second;
  }
};

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, ReduceOptions options)
    : matrix_(std::move(matrix)), options_(options), cache_(std::make_shared<Cache>()) {
  const std::size_t n = matrix_.rank();
  orders_.resize(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const Order m = matrix_.order(static_cast<Generator>(s), static_cast<Generator>(t));
      orders_[s * n + t] = m.is_infinite() ? 0 : m.value();
    }
}

void CoxeterSystem::check_letters(std::span<const Generator> word) const {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] >= rank())
      throw Error(ErrorKind::InvalidLetter, "letter " + std::to_string(i) + " is generator " +
                                                std::to_string(word[i]) + " but rank is " +
                                                std::to_string(rank()));
}

Element CoxeterSystem::generator(Generator s) const {
  check_letters(std::span(&s, 1));
  return Element{{s}};
}

std::string CoxeterSystem::step(const std::string& prefix, Generator s) const {
  std::string key = prefix;
  key.push_back(static_cast<char>(s));
  if (auto hit = cache_->find(cache_->steps, key)) return *hit;

  std::unordered_set<std::string> seen;
  std::string best = key;
  std::optional<std::string> shortened;
  saturate(key, orders_, rank(), options_.closure_budget, seen, [&](const std::string& w) {
    if (auto pos = adjacent_pair(w)) {
      shortened = w;
      shortened->erase(*pos, 2);
      return true;
    }
    if (packed_less(w, best)) best = w;
    return false;
  });

  if (shortened) {
    // l(us) = l(u) - 1, so the shortened word is reduced and its class has no pairs.
    seen.clear();
    best = *shortened;
    saturate(*shortened, orders_, rank(), options_.closure_budget, seen,
             [&](const std::string& w) {
               if (packed_less(w, best)) best = w;
               return false;
             });
  }
  cache_->store(cache_->steps, key, best, options_.cache_capacity);
  return best;
}

Element CoxeterSystem::reduce(std::span<const Generator> word) const {
  check_letters(word);
  std::string current;
  for (Generator s : word) current = step(current, s);
  return unpack(current);
}

bool CoxeterSystem::is_reduced(std::span<const Generator> word) const {
  return reduce(word).length() == word.size();
}

Element CoxeterSystem::multiply(const Element& u, const Element& v) const {
  check_letters(v.canonical);
  std::string current = pack(u.canonical);
  for (Generator s : v.canonical) current = step(current, s);
  return unpack(current);
}

Element CoxeterSystem::multiply(const Element& u, Generator s) const {
  check_letters(std::span(&s, 1));
  return unpack(step(pack(u.canonical), s));
}

Element CoxeterSystem::multiply(Generator s, const Element& v) const {
  return inverse(multiply(inverse(v), s));
}

Element CoxeterSystem::inverse(const Element& w) const {
  Word reversed(w.canonical.rbegin(), w.canonical.rend());
  std::unordered_set<std::string> seen;
  std::string best = pack(reversed);
  saturate(best, orders_, rank(), options_.closure_budget, seen, [&](const std::string& x) {
    if (packed_less(x, best)) best = x;
    return false;
  });
  return unpack(best);
}

std::pair<GenSet, GenSet> CoxeterSystem::descents(const Element& w) const {
  const std::string key = pack(w.canonical);
  if (auto hit = cache_->find(cache_->descents, key))
    return {GenSet(hit->first), GenSet(hit->second)};
  GenSet left, right;
  std::unordered_set<std::string> seen;
  if (!key.empty()) {
    saturate(key, orders_, rank(), options_.closure_budget, seen, [&](const std::string& x) {
      left.insert(static_cast<Generator>(x.front()));
      right.insert(static_cast<Generator>(x.back()));
      return false;
    });
  }
  cache_->store(cache_->descents, key, std::pair{left.mask(), right.mask()},
                options_.cache_capacity);
  return {left, right};
}

GenSet CoxeterSystem::right_descents(const Element& w) const { return descents(w).second; }

GenSet CoxeterSystem::left_descents(const Element& w) const { return descents(w).first; }

bool CoxeterSystem::in_parabolic(const Element& w, GenSet subset) const {
  return std::all_of(w.canonical.begin(), w.canonical.end(),
                     [&](Generator g) { return subset.contains(g); });
}

std::vector<Word> CoxeterSystem::reduced_words(const Element& w) const {
  std::unordered_set<std::string> seen;
  saturate(pack(w.canonical), orders_, rank(), options_.closure_budget, seen,
           [](const std::string&) { return false; });
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& x : seen) out.push_back(unpack(x).canonical);
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::size_t CoxeterSystem::cache_size() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->steps.size() + cache_->descents.size();
}

}  // namespace coxeter
