#include "sextic/coset_enum.hpp"

#include <algorithm>

namespace sextic::fpgroup {

std::size_t CosetTable::act(std::size_t coset, const Word& w) const {
  for (int x : w.packed()) {
    int col = x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
    coset = static_cast<std::size_t>(act(coset, col));
  }
  return coset;
}

namespace {

constexpr std::int32_t kUndef = -1;

std::vector<int> to_columns(const Word& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (int x : w.packed()) cols.push_back(x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1);
  return cols;
}

class Enumerator {
 public:
  Enumerator(const Presentation& pres, std::size_t limit)
      : ncols_(2 * pres.generators()), limit_(limit) {
    for (const auto& r : pres.relators()) relators_.push_back(to_columns(r));
    grow(std::min<std::size_t>(limit_, 1024));
    new_row();  // the subgroup coset
  }

  CosetTable run(const std::vector<Word>& subgroup, EnumerationStats* stats) {
    std::vector<std::vector<int>> hcols;
    for (const auto& h : subgroup) hcols.push_back(to_columns(h.reduced()));
    std::size_t current = 0;
    while (current < used_) {
      if (current == 0) {
        for (const auto& h : hcols) {
          scan_and_fill(0, h);
          process_queue();
        }
      }
      if (alive(current)) {
        for (const auto& r : relators_) {
          if (!alive(current)) break;
          scan_and_fill(current, r);
          process_queue();
        }
        for (int x = 0; x < ncols_ && alive(current); ++x) {
          if (at(current, x) == kUndef) {
            define(current, x);
            process_queue();
          }
        }
      }
      if (need_space_) {
        // the current coset is revisited after compaction
        current = lookahead(current);
        need_space_ = false;
      } else {
        ++current;
      }
    }
    if (stats) {
      stats->max_cosets = peak_;
      stats->total_defined = total_;
      stats->lookaheads = lookaheads_;
    }
    compact(0);
    std::vector<std::int32_t> data(table_.begin(), table_.begin() + static_cast<long>(used_ * ncols_));
    return CosetTable(ncols_ / 2, used_, std::move(data));
  }

 private:
  int ncols_;
  std::size_t limit_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;  // union-find, parent_[c] == c iff alive
  std::size_t used_ = 0;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
  std::size_t total_ = 0;
  int lookaheads_ = 0;
  bool need_space_ = false;
  bool defining_ = true;
  std::vector<std::int32_t> queue_;

  static int inv(int col) { return col ^ 1; }

  std::int32_t& at(std::size_t c, int col) { return table_[c * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  void grow(std::size_t rows) {
    table_.resize(rows * static_cast<std::size_t>(ncols_), kUndef);
    parent_.resize(rows);
  }

  std::int32_t new_row() {
    if (used_ * static_cast<std::size_t>(ncols_) >= table_.size())
      grow(std::min(limit_, std::max<std::size_t>(used_ * 2, 16)));
    auto c = static_cast<std::int32_t>(used_++);
    parent_[static_cast<std::size_t>(c)] = c;
    std::fill_n(table_.begin() + static_cast<long>(static_cast<std::size_t>(c) * ncols_), ncols_, kUndef);
    ++live_;
    ++total_;
    peak_ = std::max(peak_, live_);
    return c;
  }

  // Returns false when no room is left; the caller then abandons the scan.
  bool define(std::size_t c, int col) {
    if (used_ >= limit_) {
      need_space_ = true;
      return false;
    }
    std::int32_t d = new_row();
    at(c, col) = d;
    at(static_cast<std::size_t>(d), inv(col)) = static_cast<std::int32_t>(c);
    return true;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue_.push_back(b);
    --live_;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    process_queue();
  }

  void process_queue() {
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      std::int32_t g = queue_[qi];
      for (int x = 0; x < ncols_; ++x) {
        std::int32_t d = at(static_cast<std::size_t>(g), x);
        if (d == kUndef) continue;
        if (at(static_cast<std::size_t>(d), inv(x)) == g) at(static_cast<std::size_t>(d), inv(x)) = kUndef;
        std::int32_t mu = rep(g);
        std::int32_t nu = rep(d);
        if (at(static_cast<std::size_t>(mu), x) != kUndef) {
          merge(nu, at(static_cast<std::size_t>(mu), x));
        } else if (at(static_cast<std::size_t>(nu), inv(x)) != kUndef) {
          merge(mu, at(static_cast<std::size_t>(nu), inv(x)));
        } else {
          at(static_cast<std::size_t>(mu), x) = nu;
          at(static_cast<std::size_t>(nu), inv(x)) = mu;
        }
      }
    }
    queue_.clear();
  }

  void scan_and_fill(std::size_t start, const std::vector<int>& w) {
    if (w.empty()) return;
    const auto alpha = static_cast<std::int32_t>(start);
    std::int32_t f = alpha, b = alpha;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j && at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) != kUndef) {
        f = at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && at(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(j)])) != kUndef) {
        b = at(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) = b;
        at(static_cast<std::size_t>(b), inv(w[static_cast<std::size_t>(i)])) = f;
        return;
      }
      if (!defining_ || !define(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)])) return;
    }
  }

  // Scan-only pass over all live cosets, then compaction.  Returns the new
  // position of `current`.
  std::size_t lookahead(std::size_t current) {
    ++lookaheads_;
    defining_ = false;
    for (std::size_t c = 0; c < used_; ++c) {
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
        process_queue();
      }
    }
    defining_ = true;
    std::size_t pos = compact(current);
    if (used_ >= limit_) throw Overflow(limit_);
    return pos;
  }

  // Renumber live cosets preserving order; returns the number of live cosets
  // below `current`.
  std::size_t compact(std::size_t current) {
    std::vector<std::int32_t> renum(used_, kUndef);
    std::size_t next = 0, pos = 0;
    for (std::size_t c = 0; c < used_; ++c) {
      if (alive(c)) {
        if (c < current) ++pos;
        renum[c] = static_cast<std::int32_t>(next++);
      }
    }
    for (std::size_t c = 0; c < used_; ++c) {
      if (!alive(c)) continue;
      auto dst = static_cast<std::size_t>(renum[c]);
      for (int x = 0; x < ncols_; ++x) {
        std::int32_t v = at(c, x);
        at(dst, x) = v == kUndef ? kUndef : renum[static_cast<std::size_t>(rep(v))];
      }
    }
    for (std::size_t c = 0; c < next; ++c) parent_[c] = static_cast<std::int32_t>(c);
    used_ = next;
    live_ = next;
    return pos;
  }
};

}  // namespace

CosetTable coset_enumerate(const Presentation& pres, const std::vector<Word>& subgroup, std::size_t limit,
                           EnumerationStats* stats) {
  if (limit == 0) throw std::invalid_argument("coset_enumerate: limit must be positive");
  if (pres.generators() == 0) return CosetTable(0, 1, {});
  for (const auto& h : subgroup)
    if (h.max_generator() >= pres.generators())
      throw std::invalid_argument("coset_enumerate: subgroup generator uses an undeclared generator");
  Enumerator e(pres, limit);
  return e.run(subgroup, stats);
}

std::size_t group_order(const Presentation& pres, std::size_t limit) {
  return coset_enumerate(pres, {}, limit).index();
}

bool table_is_consistent(const CosetTable& table, const Presentation& pres, const std::vector<Word>& subgroup) {
  const std::size_t n = table.index();
  for (int col = 0; col < table.columns(); ++col) {
    std::vector<char> hit(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      auto d = table.act(c, col);
      if (d < 0 || static_cast<std::size_t>(d) >= n || hit[static_cast<std::size_t>(d)]) return false;
      hit[static_cast<std::size_t>(d)] = 1;
      if (static_cast<std::size_t>(table.act(static_cast<std::size_t>(d), col ^ 1)) != c) return false;
    }
  }
  for (const auto& r : pres.relators())
    for (std::size_t c = 0; c < n; ++c)
      if (table.act(c, r) != c) return false;
  for (const auto& h : subgroup)
    if (table.act(0, h) != 0) return false;
  return true;
}

}  // namespace sextic::fpgroup
