#include <algorithm>
#include <numeric>
#include <set>

#include "almostcyclic/weightcalc.hpp"

namespace acyc {

namespace {

// Characteristic predicates; p = 0 behaves as "larger than everything".
bool divides(int p, int64_t x) { return p != 0 && x % p == 0; }
bool above(int p, int q) { return p == 0 || p > q; }

Weight fw(int n, int i, int k = 1) {
  Weight w(n);
  w[i - 1] = k;
  return w;
}

Weight fw2(int n, int i, int a, int j, int b) {
  Weight w(n);
  w[i - 1] += a;
  w[j - 1] += b;
  return w;
}

Table1Row row(std::string label, Family f, int n, Weight hw, std::string cond, int64_t zero, int64_t dim) {
  return Table1Row{std::move(label), f, n, hw, std::move(cond), zero, dim, zero, dim, ""};
}

Table1Row corrected(Table1Row r, int64_t zero, int64_t dim, std::string note) {
  r.zero_mult = zero;
  r.dim = dim;
  r.note = std::move(note);
  return r;
}

}  // namespace

std::vector<Table1Row> table1_rows(Family family, int n, int p) {
  std::vector<Table1Row> out;
  const int64_t N = n;
  switch (family) {
    case Family::A:
      if (n > 1) {
        if (!divides(p, n + 1)) {
          out.push_back(row("A_n w1+w_n", family, n, fw2(n, 1, 1, n, 1), "p does not divide n+1", N, N * N + 2 * N));
        } else if (!(n == 2 && p == 3)) {
          out.push_back(row("A_n w1+w_n", family, n, fw2(n, 1, 1, n, 1), "p divides n+1, (n,p) != (2,3)", N - 1,
                            N * N + 2 * N - 1));
        }
      }
      if (n == 3 && above(p, 3)) out.push_back(row("A3 2w2", family, n, fw(n, 2, 2), "p > 3", 2, 20));
      break;
    case Family::B:
      if (n > 2 && p != 2) {
        out.push_back(row("B_n w2", family, n, fw(n, 2), "p != 2", N, 2 * N * N + N));
        if (divides(p, 2 * n + 1)) {
          out.push_back(corrected(row("B_n 2w1", family, n, fw(n, 1, 2), "p divides 2n+1", N, 2 * N * N + 3 * N - 1),
                                  N - 1, 2 * N * N + 3 * N - 1,
                                  "listed zero multiplicity n exceeds the weight count; n-1 used"));
        } else {
          out.push_back(corrected(row("B_n 2w1", family, n, fw(n, 1, 2), "p does not divide 2n+1", N + 1, 2 * N * N + 3 * N),
                                  N, 2 * N * N + 3 * N,
                                  "listed zero multiplicity n+1 exceeds the weight count; n used"));
        }
      }
      if (n == 2 && p != 2) {
        out.push_back(row("B2 2w2", family, n, fw(n, 2, 2), "p != 2", 2, 10));
        if (p != 5) out.push_back(row("B2 2w1", family, n, fw(n, 1, 2), "p != 2,5", 2, 14));
      }
      break;
    case Family::C:
      if (n > 2) {
        out.push_back(row("C_n 2w1", family, n, fw(n, 1, 2), "", N, 2 * N * N + N));
        if (!(n == 3 && p == 3)) {
          if (!divides(p, n)) {
            out.push_back(row("C_n w2", family, n, fw(n, 2), "p does not divide n", N - 1, 2 * N * N - N - 1));
          } else {
            out.push_back(row("C_n w2", family, n, fw(n, 2), "p divides n", N - 2, 2 * N * N - N - 2));
          }
        }
      }
      if (n == 2 && p != 2) {
        out.push_back(row("C2 2w1", family, n, fw(n, 1, 2), "p != 2", 2, 10));
        if (p != 5) out.push_back(row("C2 2w2", family, n, fw(n, 2, 2), "p != 2,5", 2, 14));
      }
      if (n == 4 && p != 2 && p != 3) {
        out.push_back(corrected(row("C4 w4", family, n, fw(n, 4), "p != 2,3", 2, 36), 2, 42,
                                "listed dimension 36 is below the weight count 42"));
      }
      break;
    case Family::D:
      if (n > 3 && p != 2) {
        if (divides(p, n)) {
          out.push_back(row("D_n 2w1", family, n, fw(n, 1, 2), "p divides n", N - 2, 2 * N * N + N - 2));
        } else {
          out.push_back(row("D_n 2w1", family, n, fw(n, 1, 2), "p does not divide n", N - 1, 2 * N * N + N - 1));
        }
        out.push_back(corrected(row("D_n w2", family, n, fw(n, 2), "p != 2", N, 2 * N * N - N - 1), N, 2 * N * N - N,
                                "listed dimension 2n^2-n-1 is below the weight count 2n^2-n"));
      }
      if (n > 3 && p == 2) {
        const int64_t g = std::gcd(int64_t{2}, N);
        Table1Row r = row("D_n w2", family, n, fw(n, 2), "p = 2", N - g, 2 * N * N - N - g);
        r.note = "(2,n) read as gcd(2,n)";
        out.push_back(r);
      }
      break;
    case Family::E:
      if (n == 6) {
        if (p == 3) {
          out.push_back(row("E6 w2", family, n, fw(n, 2), "p = 3", 5, 77));
        } else {
          out.push_back(row("E6 w2", family, n, fw(n, 2), "p != 3", 6, 78));
        }
      } else if (n == 7) {
        if (p == 2) {
          out.push_back(row("E7 w1", family, n, fw(n, 1), "p = 2", 6, 132));
        } else {
          out.push_back(row("E7 w1", family, n, fw(n, 1), "p != 2", 7, 133));
        }
      } else if (n == 8) {
        out.push_back(row("E8 w8", family, n, fw(n, 8), "", 8, 248));
      }
      break;
    case Family::F:
      if (p == 2) {
        out.push_back(row("F4 w1", family, n, fw(n, 1), "p = 2", 2, 26));
      } else {
        out.push_back(row("F4 w1", family, n, fw(n, 1), "p != 2", 4, 52));
      }
      if (p != 3) out.push_back(row("F4 w4", family, n, fw(n, 4), "p != 3", 2, 26));
      break;
    case Family::G:
      if (p != 3) out.push_back(row("G2 w2", family, n, fw(n, 2), "p != 3", 2, 14));
      break;
  }
  return out;
}

std::vector<Table2Entry> table2_entries(const RootSystem& rs, int p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "second table entries need a prime p");
  const int n = rs.rank();
  std::vector<Table2Entry> out;
  std::set<Weight> seen;
  auto add = [&](const std::string& label, const Weight& w) {
    if (w.is_zero() || !w.is_restricted(p) || !seen.insert(w).second) return;
    out.push_back({label, w});
  };
  switch (rs.family()) {
    case Family::A:
      if (n == 1) {
        for (int a = 1; a < p; ++a) add("A1 a*w1", fw(n, 1, a));
        break;
      }
      for (int a = 1; a < p; ++a) add("A_n a*w1", fw(n, 1, a));
      for (int b = 1; b < p; ++b) add("A_n b*w_n", fw(n, n, b));
      for (int i = 2; i < n; ++i) add("A_n w_i", fw(n, i));
      for (int i = 1; i < n; ++i) {
        for (int c = 0; c < p; ++c) add("A_n c*w_i+(p-1-c)*w_i+1", fw2(n, i, c, i + 1, p - 1 - c));
      }
      break;
    case Family::B:
      if (p == 2) break;
      add("B_n w1", fw(n, 1));
      add("B_n w_n", fw(n, n));
      if (n == 2 && p != 3) {
        add("B2 ((p-3)/2)w1+w2", fw2(n, 1, (p - 3) / 2, 2, 1));
        add("B2 ((p-1)/2)w1", fw(n, 1, (p - 1) / 2));
      }
      break;
    case Family::C:
      if (p == 2) {
        add("C_n w1", fw(n, 1));
        add("C_n w_n", fw(n, n));
        break;
      }
      add("C_n w1", fw(n, 1));
      if (n == 2 && p != 3) add("C2 w2", fw(n, 2));
      if (n == 3) add("C3 w3", fw(n, 3));
      add("C_n w_n-1+((p-3)/2)w_n", fw2(n, n - 1, 1, n, (p - 3) / 2));
      add("C_n ((p-1)/2)w_n", fw(n, n, (p - 1) / 2));
      break;
    case Family::D:
      add("D_n w1", fw(n, 1));
      add("D_n w_n-1", fw(n, n - 1));
      add("D_n w_n", fw(n, n));
      break;
    case Family::E:
      if (n == 6) {
        add("E6 w1", fw(n, 1));
        add("E6 w6", fw(n, 6));
      } else if (n == 7) {
        add("E7 w7", fw(n, 7));
      }
      break;
    case Family::F:
      if (p == 3) add("F4 w4", fw(n, 4));
      break;
    case Family::G:
      add("G2 w1", fw(n, 1));
      if (p == 3) add("G2 w2", fw(n, 2));
      break;
  }
  return out;
}

CatalogEntry resolve_restricted(const RootSystem& rs, const Weight& lambda, int p) {
  rs.check(lambda);
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "restricted catalog needs a prime p");
  if (!lambda.is_restricted(p)) {
    throw Error(ErrorCode::InvalidArgument, "weight " + lambda.str() + " is not " + std::to_string(p) + "-restricted");
  }
  if (rs.family() == Family::B && p == 2) {
    throw Error(ErrorCode::Unsupported, "unsupported restricted module: B_n at p=2 is handled as C_n");
  }
  CatalogEntry e;
  if (lambda.is_zero()) {
    e.source = "trivial";
    e.row = "trivial";
    e.rule = WeightRule::OrbitOnly;
    e.dim = 1;
    return e;
  }
  for (const auto& r : table1_rows(rs.family(), rs.rank(), p)) {
    if (r.highest != lambda) continue;
    e.source = "table1";
    e.row = r.label + " (" + r.condition + ")";
    e.zero_mult = r.zero_mult;
    e.dim = r.dim;
    e.note = r.note;
    if (p > rs.e_value()) {
      e.rule = WeightRule::Premet;
    } else if (rs.family() == Family::F && lambda == rs.fundamental(1)) {
      e.rule = WeightRule::OrbitPlusZero;
    } else {
      e.rule = WeightRule::CharZeroSet;
    }
    return e;
  }
  for (const auto& t : table2_entries(rs, p)) {
    if (t.highest != lambda) continue;
    e.source = "table2";
    e.row = t.family_label;
    e.zero_mult = 1;
    const int n = rs.rank();
    const bool c_pair = rs.family() == Family::C && p % 2 == 1 &&
                        (lambda == fw2(n, n - 1, 1, n, (p - 3) / 2) || lambda == fw(n, n, (p - 1) / 2));
    if (c_pair) {
      e.rule = WeightRule::Box;
    } else if (rs.family() == Family::G && p <= rs.e_value()) {
      e.rule = p == 3 ? WeightRule::OrbitPlusZero : WeightRule::OrbitOnly;
    } else if (rs.family() == Family::C && p == 2) {
      e.rule = WeightRule::OrbitOnly;
    } else {
      e.rule = WeightRule::Premet;
    }
    return e;
  }
  if (is_minuscule(rs, lambda)) {
    e.source = "minuscule";
    e.row = "minuscule " + lambda.str();
    e.rule = WeightRule::OrbitOnly;
    return e;
  }
  throw Error(ErrorCode::Unsupported, "unsupported restricted module: " + rs.name() + " " + lambda.str() + " at p=" +
                                          std::to_string(p));
}

}  // namespace acyc
