#include "ringgrp/todd_coxeter.hpp"

#include <deque>
#include <numeric>

namespace ringgrp {

namespace {

constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);
constexpr long kMaxExpandedExponent = 1'000'000;

struct TableFull {};

// Columns: 2g is generator g, 2g+1 its inverse.
using ColumnWord = std::vector<std::size_t>;

std::size_t inverse_column(std::size_t x) { return x ^ 1U; }

ColumnWord to_columns(const Presentation& p, const Word& w) {
  ColumnWord out;
  for (const auto& l : w.letters()) {
    if (abs(l.exp) > kMaxExpandedExponent) throw Error("exponent too large for coset enumeration");
    std::size_t col = 2 * p.index_of(l.gen) + (l.exp < 0 ? 1 : 0);
    long k = static_cast<long>(abs(l.exp));
    out.insert(out.end(), static_cast<std::size_t>(k), col);
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(std::size_t columns, std::size_t max_cosets) : columns_(columns), max_(max_cosets) {
    new_row();
  }

  std::size_t rows() const { return table_.size(); }
  bool live(std::size_t c) const { return parent_[c] == c; }
  std::size_t entry(std::size_t c, std::size_t x) const { return table_[c][x]; }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < rows(); ++c) n += live(c);
    return n;
  }

  void define(std::size_t c, std::size_t x) {
    if (rows() >= max_) throw TableFull{};
    std::size_t d = new_row();
    table_[c][x] = d;
    table_[d][inverse_column(x)] = c;
  }

  // Without `fill` the scan only records deductions and coincidences.
  void scan(std::size_t alpha, const ColumnWord& w, bool fill) {
    if (w.empty()) return;
    std::size_t f = alpha;
    std::size_t b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    for (;;) {
      while (i < j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][inverse_column(w[j - 1])] != kUndefined)
        b = table_[b][inverse_column(w[--j])];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][w[i]] = b;
        table_[b][inverse_column(w[i])] = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  // Renumbers live rows in order; returns the new index of the first live
  // row at or after `keep`.
  std::size_t compact(std::size_t keep) {
    std::vector<std::size_t> remap(rows(), kUndefined);
    std::size_t n = 0;
    std::size_t new_keep = kUndefined;
    for (std::size_t c = 0; c < rows(); ++c) {
      if (c >= keep && new_keep == kUndefined && live(c)) new_keep = n;
      if (live(c)) remap[c] = n++;
    }
    std::vector<std::vector<std::size_t>> table(n);
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      auto& row = table[remap[c]];
      row = table_[c];
      for (auto& e : row)
        if (e != kUndefined) e = remap[e];
    }
    table_ = std::move(table);
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    return new_keep == kUndefined ? n : new_keep;
  }

 private:
  std::size_t new_row() {
    table_.emplace_back(columns_, kUndefined);
    parent_.push_back(table_.size() - 1);
    return table_.size() - 1;
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < columns_; ++x) {
        std::size_t f = table_[e][x];
        if (f == kUndefined) continue;
        std::size_t xi = inverse_column(x);
        if (table_[f][xi] == e) table_[f][xi] = kUndefined;
        std::size_t e1 = rep(e);
        std::size_t f1 = rep(f);
        if (table_[e1][x] != kUndefined) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][xi] != kUndefined) {
          merge(e1, table_[f1][xi], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][xi] = e1;
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t max_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
};

CosetTable standardize(const Enumerator& en, const std::vector<Generator>& gens) {
  const std::size_t columns = 2 * gens.size();
  std::vector<std::size_t> order{0};
  std::vector<std::size_t> label(en.rows(), kUndefined);
  label[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t x = 0; x < columns; ++x) {
      std::size_t d = en.entry(order[k], x);
      if (label[d] == kUndefined) {
        label[d] = order.size();
        order.push_back(d);
      }
    }
  CosetTable t;
  t.generators = gens;
  t.num_cosets = order.size();
  t.complete = true;
  t.forward.assign(gens.size(), std::vector<std::size_t>(order.size()));
  t.backward = t.forward;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      t.forward[g][k] = label[en.entry(order[k], 2 * g)];
      t.backward[g][k] = label[en.entry(order[k], 2 * g + 1)];
    }
  return t;
}

std::size_t generator_column(const CosetTable& t, Generator g) {
  for (std::size_t i = 0; i < t.generators.size(); ++i)
    if (t.generators[i] == g) return i;
  throw UnknownGenerator(g.name());
}

}  // namespace

std::size_t CosetTable::act(std::size_t coset, const Word& w) const {
  if (!complete) throw IncompleteTable();
  for (const auto& l : w.letters()) {
    std::size_t g = generator_column(*this, l.gen);
    const auto& col = l.exp > 0 ? forward[g] : backward[g];
    if (abs(l.exp) > kMaxExpandedExponent) throw Error("exponent too large for coset enumeration");
    for (long k = static_cast<long>(abs(l.exp)); k > 0; --k) coset = col[coset];
  }
  return coset;
}

std::vector<std::size_t> CosetTable::permutation(const Word& w) const {
  std::vector<std::size_t> out(num_cosets);
  for (std::size_t c = 0; c < num_cosets; ++c) out[c] = act(c, w);
  return out;
}

CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  if (max_cosets == 0) throw Error("max_cosets must be positive");
  std::vector<ColumnWord> rels;
  for (const auto& r : p.relators()) rels.push_back(to_columns(p, free_reduce(r)));
  std::vector<ColumnWord> subs;
  for (const auto& w : subgroup) subs.push_back(to_columns(p, free_reduce(w)));
  const std::size_t columns = 2 * p.generators().size();

  Enumerator en(columns, max_cosets);
  std::size_t c = 0;
  while (c < en.rows()) {
    try {
      if (en.live(c)) {
        if (c == 0)
          for (const auto& w : subs) en.scan(0, w, true);
        for (const auto& r : rels) {
          if (!en.live(c)) break;
          en.scan(c, r, true);
        }
        for (std::size_t x = 0; x < columns && en.live(c); ++x)
          if (en.entry(c, x) == kUndefined) en.define(c, x);
      }
      ++c;
    } catch (const TableFull&) {
      // Lookahead: deduce from every live coset without defining new ones.
      for (const auto& w : subs) en.scan(0, w, false);
      for (std::size_t d = 0; d < en.rows(); ++d)
        for (const auto& r : rels) {
          if (!en.live(d)) break;
          en.scan(d, r, false);
        }
      c = en.compact(c);
      if (max_cosets - en.rows() < std::max<std::size_t>(1, max_cosets / 100)) throw OutOfSpace(max_cosets);
    }
  }
  en.compact(0);
  return standardize(en, p.generators());
}

CosetTable enumerate(const GroupSpec& spec, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  return enumerate(as_presentation(spec), subgroup, max_cosets);
}

std::size_t element_order(const CosetTable& t, const Word& w) {
  if (!t.complete) throw IncompleteTable();
  auto perm = t.permutation(w);
  std::vector<bool> seen(perm.size(), false);
  std::size_t order = 1;
  for (std::size_t c = 0; c < perm.size(); ++c) {
    if (seen[c]) continue;
    std::size_t len = 0;
    for (std::size_t d = c; !seen[d]; d = perm[d]) {
      seen[d] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

bool relators_close(const CosetTable& t, const Presentation& p) {
  for (const auto& r : p.relators())
    for (std::size_t c = 0; c < t.num_cosets; ++c)
      if (t.act(c, r) != c) return false;
  return true;
}

Presentation quotient_by(const Presentation& p, const std::vector<Generator>& killed) {
  std::vector<Word> rels = p.relators();
  for (auto g : killed) {
    if (!p.has_generator(g)) throw UnknownGenerator(g.name());
    rels.push_back(Word::of(g));
  }
  return simplify(Presentation(p.name() + "_quotient", p.generators(), std::move(rels)));
}

}  // namespace ringgrp
