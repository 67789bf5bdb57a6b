#include <algorithm>
#include <stdexcept>

#include "liebranch/errors.hpp"
#include "liebranch/injection.hpp"

namespace liebranch {

/*
  Reference rows for the Xi sets, rank-instantiated. For the same-series
  chains and A -> A the rows determine the whole set at every rank; for the
  A -> B/C/D families the leading rows are fixed prefixes and only the final
  two rows are rank-parameterized, so the rows are complete only at small
  rank. Used as test fixtures against the two computed routes.
*/

namespace {

struct RowBuild {
  std::vector<long long> weight;  // window coordinates, padded with zeros
  std::optional<std::vector<long long>> labels;
  long long charge;
  int sign;
};

// weight vector: prefix then zeros, total length n
std::vector<long long> pad(std::vector<long long> prefix, int n) {
  prefix.resize(static_cast<size_t>(n), 0);
  return prefix;
}

std::optional<std::vector<long long>> pad_labels(std::vector<long long> prefix, int slots) {
  if (static_cast<int>(prefix.size()) > slots) return std::nullopt;
  prefix.resize(static_cast<size_t>(slots), 0);
  return prefix;
}

std::vector<long long> unit_label(int slots, int pos_from_1, long long v = 1) {
  std::vector<long long> l(static_cast<size_t>(slots), 0);
  if (pos_from_1 >= 1 && pos_from_1 <= slots) l[static_cast<size_t>(pos_from_1 - 1)] = v;
  return l;
}

int pow_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// rows for the prefix blocks of the A -> B/C/D tables
struct PrefixRow {
  std::vector<long long> w;
  std::vector<long long> l;
  long long q;
  int sign;
};

void add_prefix_rows(std::vector<RowBuild>& rows, const std::vector<PrefixRow>& printed, int n) {
  for (const PrefixRow& p : printed) {
    if (static_cast<int>(p.w.size()) > n) continue;  // does not fit this rank
    RowBuild r;
    r.weight = pad(p.w, n);
    r.labels = pad_labels(p.l, n - 1);
    r.charge = p.q;
    r.sign = p.sign;
    rows.push_back(std::move(r));
  }
}

std::vector<RowBuild> rows_AtoA(int n) {
  std::vector<RowBuild> rows;
  for (int k = 0; k <= n; ++k) {
    RowBuild r;
    r.weight.assign(static_cast<size_t>(n + 1), 0);
    for (int i = 0; i < k; ++i) r.weight[static_cast<size_t>(i)] = 1;
    r.weight[static_cast<size_t>(n)] = -k;
    r.labels = (k == 0 || k == n) ? unit_label(n - 1, 0) : unit_label(n - 1, k);
    r.charge = k;
    r.sign = (k == 0) ? 0 : pow_sign(k + 1);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<RowBuild> rows_BtoB(int n) {
  std::vector<RowBuild> rows;
  const int slots = n - 1;
  auto weight = [&](long long first, int ones_count) {
    std::vector<long long> w(static_cast<size_t>(n), 0);
    w[0] = first;
    for (int i = 1; i <= ones_count; ++i) w[static_cast<size_t>(i)] = 1;
    return w;
  };
  for (int k = 0; k <= 2 * n - 1; ++k) {
    RowBuild r;
    r.charge = k;
    r.sign = (k == 0) ? 0 : pow_sign(k + 1);
    if (k == 0) {
      r.weight = weight(0, 0);
      r.labels = unit_label(slots, 0);
    } else if (k <= n - 2) {
      r.weight = weight(k, k);
      r.labels = unit_label(slots, k);
    } else if (k == n - 1 || k == n) {
      r.weight = weight(k, n - 1);
      r.labels = unit_label(slots, slots, 2);  // spinor label doubled
    } else {
      const int j = k - n;  // 1..n-1
      r.weight = weight(k, n - 1 - j);
      r.labels = unit_label(slots, n - 1 - j);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<RowBuild> rows_CtoC(int n) {
  std::vector<RowBuild> rows;
  const int slots = n - 1;
  auto weight = [&](long long first, int ones_count) {
    std::vector<long long> w(static_cast<size_t>(n), 0);
    w[0] = first;
    for (int i = 1; i <= ones_count; ++i) w[static_cast<size_t>(i)] = 1;
    return w;
  };
  for (int k = 0; k <= 2 * n - 1; ++k) {
    RowBuild r;
    r.sign = (k == 0) ? 0 : pow_sign(k + 1);
    if (k == 0) {
      r.weight = weight(0, 0);
      r.labels = unit_label(slots, 0);
      r.charge = 0;
    } else if (k <= n - 1) {
      r.weight = weight(k, k);
      r.labels = unit_label(slots, k);
      r.charge = k;
    } else {
      const int j = k - n;  // 0..n-1; the long root bumps the charge by 2
      r.weight = weight(k + 1, n - 1 - j);
      r.labels = unit_label(slots, n - 1 - j);
      r.charge = k + 1;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<RowBuild> rows_DtoD(int n) {
  std::vector<RowBuild> rows;
  const int slots = n - 1;
  const bool with_labels = (n >= 4);  // D2 subalgebra: printed label patterns do not apply
  auto weight = [&](long long first, int ones_count, long long last = 0) {
    std::vector<long long> w(static_cast<size_t>(n), 0);
    w[0] = first;
    for (int i = 1; i <= ones_count; ++i) w[static_cast<size_t>(i)] = 1;
    if (last != 0) w[static_cast<size_t>(n - 1)] = last;
    return w;
  };
  auto maybe = [&](std::vector<long long> l) -> std::optional<std::vector<long long>> {
    if (!with_labels) return std::nullopt;
    return l;
  };
  for (int k = 0; k <= 2 * n - 2; ++k) {
    RowBuild r;
    r.charge = k;
    r.sign = (k == 0) ? 0 : pow_sign(k + 1);
    if (k == 0) {
      r.weight = weight(0, 0);
      r.labels = maybe(unit_label(slots, 0));
    } else if (k <= n - 3) {
      r.weight = weight(k, k);
      r.labels = maybe(unit_label(slots, k));
    } else if (k == n - 2) {
      r.weight = weight(k, n - 2);
      auto l = unit_label(slots, slots - 1);
      l[static_cast<size_t>(slots - 1)] = 1;
      r.labels = maybe(l);
    } else if (k == n - 1) {
      r.weight = weight(k, n - 1);
      r.labels = maybe(unit_label(slots, slots, 2));
    } else {
      const int j = k - (n - 1);  // 1..n-1
      r.weight = weight(k, n - 1 - j);
      if (j == 1) {
        auto l = unit_label(slots, slots - 1);
        l[static_cast<size_t>(slots - 1)] = 1;
        r.labels = maybe(l);
      } else {
        r.labels = maybe(unit_label(slots, n - 1 - j));
      }
    }
    rows.push_back(std::move(r));
  }
  {
    // the extra element (n-1,1,...,1,-1), same charge and sign as its mirror
    RowBuild r;
    r.weight = weight(n - 1, n - 2, -1);
    auto l = unit_label(slots, slots - 1, 2);
    r.labels = maybe(l);
    r.charge = n - 1;
    r.sign = pow_sign(n);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<RowBuild> rows_AtoB(int n) {
  std::vector<RowBuild> rows;
  rows.push_back({pad({}, n), pad_labels({}, n - 1), 0, 0});
  add_prefix_rows(rows,
                  {
                      {{1}, {1}, 1, 1},
                      {{2, 1}, {1, 1}, 3, -1},
                      {{2, 2}, {0, 2}, 4, 1},
                      {{3, 1, 1}, {2, 0, 1}, 5, 1},
                      {{3, 2, 1}, {1, 1, 1}, 6, -1},
                      {{3, 3, 2}, {0, 1, 2}, 8, 1},
                      {{3, 3, 3}, {0, 0, 3}, 9, -1},
                  },
                  n);
  {  // (n,...,n,n-1) and (n,...,n)
    RowBuild r;
    r.weight.assign(static_cast<size_t>(n), n);
    r.weight.back() = n - 1;
    r.labels = unit_label(n - 1, n - 1);
    r.charge = static_cast<long long>(n) * n - 1;
    r.sign = pow_sign(static_cast<long long>(n) * (n + 1) / 2);
    rows.push_back(std::move(r));
    RowBuild r2;
    r2.weight.assign(static_cast<size_t>(n), n);
    r2.labels = unit_label(n - 1, 0);
    r2.charge = static_cast<long long>(n) * n;
    r2.sign = pow_sign(static_cast<long long>(n) * (n + 1) / 2 + 1);
    rows.push_back(std::move(r2));
  }
  return rows;
}

std::vector<RowBuild> rows_AtoC(int n) {
  std::vector<RowBuild> rows;
  rows.push_back({pad({}, n), pad_labels({}, n - 1), 0, 0});
  add_prefix_rows(rows,
                  {
                      {{2}, {2}, 2, 1},
                      {{3, 1}, {2, 1}, 4, -1},
                      {{3, 3}, {0, 3}, 6, 1},
                      {{4, 1, 1}, {3, 0, 1}, 6, 1},
                      {{4, 3, 1}, {1, 2, 1}, 8, -1},
                      {{4, 4, 2}, {0, 2, 2}, 10, 1},
                      {{4, 4, 4}, {0, 0, 4}, 12, -1},
                  },
                  n);
  {  // (n+1,...,n+1,n-1) and (n+1,...,n+1)
    RowBuild r;
    r.weight.assign(static_cast<size_t>(n), n + 1);
    r.weight.back() = n - 1;
    r.labels = unit_label(n - 1, n - 1, 2);
    r.charge = static_cast<long long>(n) * n + n - 2;
    r.sign = pow_sign(static_cast<long long>(n) * (n + 1) / 2);
    rows.push_back(std::move(r));
    RowBuild r2;
    r2.weight.assign(static_cast<size_t>(n), n + 1);
    r2.labels = unit_label(n - 1, 0);
    r2.charge = static_cast<long long>(n) * n + n;
    r2.sign = pow_sign(static_cast<long long>(n) * (n + 1) / 2 + 1);
    rows.push_back(std::move(r2));
  }
  return rows;
}

std::vector<RowBuild> rows_AtoD(int n) {
  std::vector<RowBuild> rows;
  rows.push_back({pad({}, n), pad_labels({}, n - 1), 0, 0});
  add_prefix_rows(rows,
                  {
                      {{1, 1}, {0, 1}, 2, 1},
                      {{2, 1, 1}, {1, 0, 1}, 4, -1},
                      {{2, 2, 2}, {0, 0, 2}, 6, 1},
                      {{3, 1, 1, 1}, {2, 0, 0, 1}, 6, 1},
                      {{3, 2, 2, 1}, {1, 0, 1, 1}, 8, -1},
                      {{3, 3, 2, 2}, {0, 1, 0, 2}, 10, 1},
                      {{3, 3, 3, 3}, {0, 0, 0, 3}, 12, -1},
                  },
                  n);
  if (n >= 3) {  // (n-1,...,n-1,n-2,n-2) and (n-1,...,n-1)
    RowBuild r;
    r.weight.assign(static_cast<size_t>(n), n - 1);
    r.weight[static_cast<size_t>(n - 2)] = n - 2;
    r.weight[static_cast<size_t>(n - 1)] = n - 2;
    r.labels = unit_label(n - 1, n - 2);
    r.charge = static_cast<long long>(n) * n - n - 2;
    r.sign = pow_sign(static_cast<long long>(n) * (n - 1) / 2);
    rows.push_back(std::move(r));
    RowBuild r2;
    r2.weight.assign(static_cast<size_t>(n), n - 1);
    r2.labels = unit_label(n - 1, 0);
    r2.charge = static_cast<long long>(n) * n - n;
    r2.sign = pow_sign(static_cast<long long>(n) * (n - 1) / 2 + 1);
    rows.push_back(std::move(r2));
  }
  return rows;
}

}  // namespace

XiTable xi_table_reference(Family f, int n) {
  const int min_rank = (f == Family::DtoD) ? 3 : 2;
  if (n < min_rank || n > 6)
    throw std::invalid_argument("xi_table_reference: no stored rows for " + family_name(f) +
                                " at rank " + std::to_string(n));
  std::vector<RowBuild> rows;
  bool complete = true;
  switch (f) {
    case Family::AtoA: rows = rows_AtoA(n); break;
    case Family::BtoB: rows = rows_BtoB(n); break;
    case Family::CtoC: rows = rows_CtoC(n); break;
    case Family::DtoD: rows = rows_DtoD(n); break;
    case Family::AtoB: rows = rows_AtoB(n); complete = (n <= 3); break;
    case Family::AtoC: rows = rows_AtoC(n); complete = (n <= 3); break;
    case Family::AtoD: rows = rows_AtoD(n); complete = (n <= 4); break;
  }

  const int dim = (f == Family::AtoA) ? n + 1 : n;
  XiTable table;
  table.complete = complete;
  for (RowBuild& r : rows) {
    if (static_cast<int>(r.weight.size()) != dim)
      throw InternalError("xi_table_reference: bad row width");
    XiTableRow row;
    row.w = weight_of(r.weight);
    row.labels = std::move(r.labels);
    row.charge = r.charge;
    row.sign = r.sign;
    // merge duplicate weights produced by overlapping generic/tail patterns
    auto dup = std::find_if(table.rows.begin(), table.rows.end(),
                            [&](const XiTableRow& x) { return x.w == row.w; });
    if (dup != table.rows.end()) {
      if (dup->charge != row.charge || dup->sign != row.sign)
        throw InternalError("xi_table_reference: conflicting duplicate rows at " +
                            to_string(row.w));
      if (!dup->labels) dup->labels = row.labels;
      else if (row.labels && *dup->labels != *row.labels)
        throw InternalError("xi_table_reference: conflicting labels at " + to_string(row.w));
      continue;
    }
    table.rows.push_back(std::move(row));
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const XiTableRow& a, const XiTableRow& b) {
    if (a.charge != b.charge) return a.charge < b.charge;
    return a.w < b.w;
  });
  return table;
}

}  // namespace liebranch
