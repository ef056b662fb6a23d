#include "numerolab/magic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace numerolab::magic {
namespace {

// Sign of 1-based position k along a line: sum is all +, alternating is
// + + - + - + ...
int sign_at(Law law, std::size_t index0) {
  if (law == Law::sum || index0 < 2) return 1;
  return index0 % 2 == 0 ? -1 : 1;
}

template <typename Cell>
Cell eval_line(Law law, const std::vector<Cell>& cells, std::size_t start,
               std::size_t stride, std::size_t count) {
  Cell acc = cells[start];
  for (std::size_t i = 1; i < count; ++i) {
    const Cell& c = cells[start + i * stride];
    if (sign_at(law, i) > 0)
      acc += c;
    else
      acc -= c;
  }
  return acc;
}

void check_grid_shape(const SquareGrid& grid) {
  if (grid.order < 2) throw std::invalid_argument("order must be at least 2");
  if (grid.cells.size() != grid.order * grid.order)
    throw std::invalid_argument("cell count must be order squared");
  if (grid.distinct) {
    std::vector<Int> sorted = grid.cells;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("distinct grid repeats a cell");
  }
}

// Exhaustive backtracking over int64 grids. A precomputed schedule fills
// the first row (fixing the line constant), then interleaves free cells
// with cells forced as the last blank of some line; signed min/max
// completion bounds prune every partial line.
class Search {
 public:
  Search(std::vector<long long> pool, std::size_t n, Law law, bool diagonals,
         bool distinct)
      : pool_(std::move(pool)),
        n_(n),
        distinct_(distinct),
        grid_(n * n, 0),
        used_(pool_.size(), false) {
    for (std::size_t r = 0; r < n_; ++r) {
      Line row;
      for (std::size_t c = 0; c < n_; ++c) row.cells.push_back(r * n_ + c);
      lines_.push_back(std::move(row));
    }
    for (std::size_t c = 0; c < n_; ++c) {
      Line col;
      for (std::size_t r = 0; r < n_; ++r) col.cells.push_back(r * n_ + c);
      lines_.push_back(std::move(col));
    }
    if (diagonals) {
      Line diag, anti;
      for (std::size_t i = 0; i < n_; ++i) {
        diag.cells.push_back(i * (n_ + 1));
        anti.cells.push_back((i + 1) * (n_ - 1));
      }
      lines_.push_back(std::move(diag));
      lines_.push_back(std::move(anti));
    }
    cell_lines_.resize(n_ * n_);
    for (std::size_t li = 0; li < lines_.size(); ++li) {
      Line& line = lines_[li];
      line.remaining = static_cast<int>(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        int sign = sign_at(law, i);
        (sign > 0 ? line.plus_rem : line.minus_rem) += 1;
        cell_lines_[line.cells[i]].push_back({static_cast<int>(li), sign});
      }
    }
    // Signed completion bounds: k distinct cells need the k smallest or
    // largest pool values; with reuse a single extreme value repeats.
    small_.assign(n_ + 1, 0);
    large_.assign(n_ + 1, 0);
    for (std::size_t k = 1; k <= n_; ++k) {
      if (distinct_) {
        small_[k] = small_[k - 1] + pool_[std::min(k, pool_.size()) - 1];
        large_[k] = large_[k - 1] + pool_[pool_.size() - std::min(k, pool_.size())];
      } else {
        small_[k] = static_cast<long long>(k) * pool_.front();
        large_[k] = static_cast<long long>(k) * pool_.back();
      }
    }
    for (std::size_t i = 0; i < pool_.size(); ++i) index_[pool_[i]] = i;
    build_schedule();
  }

  std::vector<std::vector<long long>> run() {
    if (distinct_ && pool_.size() < n_ * n_) return {};
    step(0);
    return std::move(found_);
  }

 private:
  struct Line {
    std::vector<std::size_t> cells;
    long long partial = 0;
    int remaining = 0;
    int plus_rem = 0;
    int minus_rem = 0;
  };
  struct CellLine {
    int line;
    int sign;
  };
  struct Step {
    std::size_t cell;
    int forced_by;  // line index, or -1 for a free pool scan
    int forced_sign;
  };

  void build_schedule() {
    std::vector<char> planned(n_ * n_, false);
    std::vector<int> missing(lines_.size(), static_cast<int>(n_));
    auto mark = [&](std::size_t cell, int forced_by, int forced_sign) {
      schedule_.push_back({cell, forced_by, forced_sign});
      planned[cell] = true;
      for (const CellLine& cl : cell_lines_[cell]) --missing[cl.line];
    };
    // The first row runs first so the constant is known for everything else.
    for (std::size_t c = 0; c < n_; ++c) mark(c, -1, 0);
    while (schedule_.size() < n_ * n_) {
      bool forced = false;
      for (std::size_t li = 0; li < lines_.size() && !forced; ++li) {
        if (missing[li] != 1) continue;
        for (std::size_t i = 0; i < n_; ++i) {
          std::size_t cell = lines_[li].cells[i];
          if (planned[cell]) continue;
          mark(cell, static_cast<int>(li), sign_at_position(li, i));
          forced = true;
          break;
        }
      }
      if (forced) continue;
      // Free pick: the cell whose lines are closest to completion.
      std::size_t best = 0;
      int best_score = -1, best_fanout = -1;
      for (std::size_t cell = 0; cell < n_ * n_; ++cell) {
        if (planned[cell]) continue;
        int score = 0;
        int fanout = static_cast<int>(cell_lines_[cell].size());
        for (const CellLine& cl : cell_lines_[cell])
          score += static_cast<int>(n_) - missing[cl.line];
        if (score > best_score ||
            (score == best_score && fanout > best_fanout)) {
          best = cell;
          best_score = score;
          best_fanout = fanout;
        }
      }
      mark(best, -1, 0);
    }
  }

  int sign_at_position(std::size_t li, std::size_t i) const {
    int plus = 0;
    for (const CellLine& cl : cell_lines_[lines_[li].cells[i]])
      if (cl.line == static_cast<int>(li)) plus = cl.sign;
    return plus;
  }

  // 0 rejected (state untouched), 1 placed, 2 placed and set the constant.
  int place(std::size_t cell, long long x) {
    struct Update {
      Line* line;
      long long partial;
      int plus_rem, minus_rem;
    };
    Update updates[4];
    int count = 0;
    bool known = const_known_;
    long long constant = constant_;
    bool set_const = false;
    for (const CellLine& cl : cell_lines_[cell]) {
      Line& line = lines_[cl.line];
      long long partial = line.partial + (cl.sign > 0 ? x : -x);
      int plus_rem = line.plus_rem - (cl.sign > 0 ? 1 : 0);
      int minus_rem = line.minus_rem - (cl.sign < 0 ? 1 : 0);
      if (line.remaining == 1) {
        if (!known) {
          constant = partial;
          known = true;
          set_const = true;
        } else if (partial != constant) {
          return 0;
        }
      } else if (known) {
        long long lo = partial + small_[plus_rem] - large_[minus_rem];
        long long hi = partial + large_[plus_rem] - small_[minus_rem];
        if (constant < lo || hi < constant) return 0;
      }
      updates[count++] = {&line, partial, plus_rem, minus_rem};
    }
    for (int i = 0; i < count; ++i) {
      updates[i].line->partial = updates[i].partial;
      updates[i].line->plus_rem = updates[i].plus_rem;
      updates[i].line->minus_rem = updates[i].minus_rem;
      updates[i].line->remaining -= 1;
    }
    grid_[cell] = x;
    if (set_const) {
      const_known_ = true;
      constant_ = constant;
      return 2;
    }
    return 1;
  }

  void unplace(std::size_t cell, long long x, bool reset_const) {
    for (const CellLine& cl : cell_lines_[cell]) {
      Line& line = lines_[cl.line];
      line.partial -= cl.sign > 0 ? x : -x;
      line.plus_rem += cl.sign > 0 ? 1 : 0;
      line.minus_rem += cl.sign < 0 ? 1 : 0;
      line.remaining += 1;
    }
    if (reset_const) const_known_ = false;
  }

  void step(std::size_t si) {
    if (si == schedule_.size()) {
      found_.push_back(grid_);
      return;
    }
    const Step& st = schedule_[si];
    if (st.forced_by >= 0) {
      const Line& line = lines_[st.forced_by];
      long long x = st.forced_sign > 0 ? constant_ - line.partial
                                       : line.partial - constant_;
      auto it = index_.find(x);
      if (it == index_.end()) return;
      if (distinct_ && used_[it->second]) return;
      int placed = place(st.cell, x);
      if (!placed) return;
      used_[it->second] = true;
      step(si + 1);
      used_[it->second] = false;
      unplace(st.cell, x, placed == 2);
      return;
    }
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (distinct_ && used_[i]) continue;
      int placed = place(st.cell, pool_[i]);
      if (!placed) continue;
      used_[i] = true;
      step(si + 1);
      used_[i] = false;
      unplace(st.cell, pool_[i], placed == 2);
    }
  }

  std::vector<long long> pool_;
  std::size_t n_;
  bool distinct_;
  std::vector<long long> grid_;
  std::vector<char> used_;
  std::vector<Line> lines_;
  std::vector<std::vector<CellLine>> cell_lines_;
  std::vector<Step> schedule_;
  std::vector<long long> small_, large_;
  bool const_known_ = false;
  long long constant_ = 0;
  std::unordered_map<long long, std::size_t> index_;
  std::vector<std::vector<long long>> found_;
};

// The eight square symmetries as cell-index maps.
std::vector<long long> transform(const std::vector<long long>& g,
                                 std::size_t n, int which) {
  std::vector<long long> out(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t sr = r, sc = c;
      switch (which) {
        case 0: break;
        case 1: sr = n - 1 - c; sc = r; break;          // rot90
        case 2: sr = n - 1 - r; sc = n - 1 - c; break;  // rot180
        case 3: sr = c; sc = n - 1 - r; break;          // rot270
        case 4: sr = c; sc = r; break;                  // transpose
        case 5: sr = n - 1 - c; sc = n - 1 - r; break;  // anti-transpose
        case 6: sr = r; sc = n - 1 - c; break;          // mirror columns
        case 7: sr = n - 1 - r; sc = c; break;          // mirror rows
      }
      out[r * n + c] = g[sr * n + sc];
    }
  return out;
}

bool int_grid_verifies(const std::vector<long long>& g, std::size_t n,
                       Law law, bool diagonals) {
  long long constant = eval_line(law, g, 0, 1, n);
  for (std::size_t r = 1; r < n; ++r)
    if (eval_line(law, g, r * n, 1, n) != constant) return false;
  for (std::size_t c = 0; c < n; ++c)
    if (eval_line(law, g, c, n, n) != constant) return false;
  if (diagonals) {
    if (eval_line(law, g, 0, n + 1, n) != constant) return false;
    if (eval_line(law, g, n - 1, n - 1, n) != constant) return false;
  }
  return true;
}

}  // namespace

std::optional<Law> law_from_name(std::string_view name) {
  if (name == "sum") return Law::sum;
  if (name == "alternating") return Law::alternating;
  return std::nullopt;
}

std::string_view to_string(Law law) {
  return law == Law::sum ? "sum" : "alternating";
}

std::optional<Int> verify_square(const SquareGrid& grid) {
  check_grid_shape(grid);
  const std::size_t n = grid.order;
  Int constant = eval_line(grid.law, grid.cells, 0, 1, n);
  for (std::size_t r = 1; r < n; ++r)
    if (eval_line(grid.law, grid.cells, r * n, 1, n) != constant)
      return std::nullopt;
  for (std::size_t c = 0; c < n; ++c)
    if (eval_line(grid.law, grid.cells, c, n, n) != constant)
      return std::nullopt;
  if (grid.diagonals) {
    if (eval_line(grid.law, grid.cells, 0, n + 1, n) != constant)
      return std::nullopt;
    if (eval_line(grid.law, grid.cells, n - 1, n - 1, n) != constant)
      return std::nullopt;
  }
  return constant;
}

std::vector<SquareGrid> search_squares(const std::vector<Int>& pool,
                                       std::uint64_t order, Law law,
                                       bool diagonals, bool distinct,
                                       std::uint64_t limit) {
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  if (order > 5) throw std::invalid_argument("search supports orders up to 5");
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  if (pool.size() < order * order)
    throw std::invalid_argument("pool smaller than the grid");
  const long long cap = (1ll << 60) / static_cast<long long>(order);
  std::vector<long long> values;
  for (const Int& v : pool) {
    if (v < 0) throw std::invalid_argument("pool values must be nonnegative");
    if (!v.fits_slong_p() || v.get_si() > cap)
      throw std::invalid_argument("pool value too large for the search");
    values.push_back(v.get_si());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  const std::size_t n = order;
  std::set<std::vector<long long>> orbit_keys;
  std::vector<std::vector<long long>> reps;
  for (const auto& g : Search(values, n, law, diagonals, distinct).run()) {
    std::vector<long long> key = g;
    std::vector<long long> rep = g;
    for (int t = 1; t < 8; ++t) {
      std::vector<long long> image = transform(g, n, t);
      if (image < key) key = image;
      if (image < rep && int_grid_verifies(image, n, law, diagonals))
        rep = image;
    }
    if (orbit_keys.insert(std::move(key)).second) reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  if (reps.size() > limit) reps.resize(limit);

  std::vector<SquareGrid> out;
  for (const auto& rep : reps) {
    SquareGrid grid{order, {}, law, diagonals, distinct};
    for (long long v : rep) grid.cells.emplace_back(static_cast<long>(v));
    out.push_back(std::move(grid));
  }
  return out;
}

std::optional<Int> verify_cube(std::uint64_t order,
                               const std::vector<Int>& cells, Law law) {
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  const std::size_t n = order;
  if (cells.size() != n * n * n)
    throw std::invalid_argument("cell count must be order cubed");
  std::optional<Int> constant;
  auto check = [&](std::size_t start, std::size_t stride) {
    Int value = eval_line(law, cells, start, stride, n);
    if (!constant) {
      constant = value;
      return true;
    }
    return value == *constant;
  };
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      if (!check((z * n + y) * n, 1)) return std::nullopt;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      if (!check(z * n * n + x, n)) return std::nullopt;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (!check(y * n + x, n * n)) return std::nullopt;
  return constant;
}

}  // namespace numerolab::magic
