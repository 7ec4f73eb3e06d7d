#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"

namespace polarity {

// A finite bounded lattice with a residuated fusion. Validation checks the
// order, the existence of all meets and joins, the residuation triple and the
// annihilating bottom; associativity is not demanded, only recorded.
class ResiduatedLattice {
 public:
  struct Tables {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> leq;  // generating pairs, closed reflexively/transitively
    std::vector<int> fuse;                 // n*n, row-major, required
    std::vector<int> rimp;                 // n*n or empty; computed when omitted
    std::vector<int> limp;
  };

  struct Laws {
    bool associative;
    bool exchange;     // a.b = b.a
    bool weakening;    // b.a <= a
    bool contraction;  // a^b <= a.b
  };

  static ResiduatedLattice validate(const Tables& t) {
    ResiduatedLattice L;
    L.n_ = (int)t.names.size();
    if (L.n_ == 0) throw LatticeError("no elements declared");
    if (L.n_ > 16) throw LatticeError("lattices limited to 16 elements");
    L.names_ = t.names;
    for (int i = 0; i < L.n_; ++i)
      for (int j = i + 1; j < L.n_; ++j)
        if (L.names_[i] == L.names_[j])
          throw LatticeError("duplicate element '" + L.names_[i] + "'");

    L.leq_.assign((size_t)L.n_ * L.n_, false);
    for (int i = 0; i < L.n_; ++i) L.set_leq(i, i);
    for (auto [a, b] : t.leq) {
      L.range(a);
      L.range(b);
      L.set_leq(a, b);
    }
    for (int k = 0; k < L.n_; ++k)
      for (int a = 0; a < L.n_; ++a)
        for (int b = 0; b < L.n_; ++b)
          if (L.leq(a, k) && L.leq(k, b)) L.set_leq(a, b);
    for (int a = 0; a < L.n_; ++a)
      for (int b = 0; b < L.n_; ++b)
        if (a != b && L.leq(a, b) && L.leq(b, a))
          throw LatticeError("order is not antisymmetric: " + L.names_[a] + " and " + L.names_[b]);

    L.meet_.assign((size_t)L.n_ * L.n_, -1);
    L.join_.assign((size_t)L.n_ * L.n_, -1);
    for (int a = 0; a < L.n_; ++a)
      for (int b = 0; b < L.n_; ++b) {
        L.meet_[L.idx(a, b)] = L.bound(a, b, true);
        L.join_[L.idx(a, b)] = L.bound(a, b, false);
        if (L.meet_[L.idx(a, b)] < 0)
          throw LatticeError("no meet for " + L.names_[a] + ", " + L.names_[b]);
        if (L.join_[L.idx(a, b)] < 0)
          throw LatticeError("no join for " + L.names_[a] + ", " + L.names_[b]);
      }
    L.bottom_ = 0;
    L.top_ = 0;
    for (int a = 0; a < L.n_; ++a) {
      L.bottom_ = L.meet(L.bottom_, a);
      L.top_ = L.join(L.top_, a);
    }

    if ((int)t.fuse.size() != L.n_ * L.n_) throw LatticeError("fuse table is not total");
    L.fuse_ = t.fuse;
    for (int v : L.fuse_)
      if (v < 0 || v >= L.n_) throw LatticeError("fuse table entry out of range");

    auto residual = [&](bool right) {
      std::vector<int> table((size_t)L.n_ * L.n_, -1);
      for (int a = 0; a < L.n_; ++a)
        for (int c = 0; c < L.n_; ++c) {
          int acc = -1;
          for (int b = 0; b < L.n_; ++b) {
            int prod = right ? L.fuse(a, b) : L.fuse(b, a);
            if (L.leq(prod, c)) acc = acc < 0 ? b : L.join(acc, b);
          }
          table[L.idx(right ? a : c, right ? c : a)] = acc;
        }
      return table;
    };
    L.rimp_ = t.rimp.empty() ? residual(true) : t.rimp;
    L.limp_ = t.limp.empty() ? residual(false) : t.limp;
    if ((int)L.rimp_.size() != L.n_ * L.n_ || (int)L.limp_.size() != L.n_ * L.n_)
      throw LatticeError("residual table is not total");
    for (int v : L.rimp_)
      if (v < 0 || v >= L.n_) throw LatticeError("rimp table entry out of range");
    for (int v : L.limp_)
      if (v < 0 || v >= L.n_) throw LatticeError("limp table entry out of range");

    for (int a = 0; a < L.n_; ++a)
      for (int b = 0; b < L.n_; ++b)
        for (int c = 0; c < L.n_; ++c) {
          bool p = L.leq(L.fuse(a, b), c);
          bool q = L.leq(b, L.rimp(a, c));
          bool r = L.leq(a, L.limp(c, b));
          if (p != q || q != r)
            throw LatticeError("residuation fails at (" + L.names_[a] + ", " + L.names_[b] +
                               ", " + L.names_[c] + ")");
        }
    for (int a = 0; a < L.n_; ++a) {
      if (L.fuse(a, L.bottom_) != L.bottom_ || L.fuse(L.bottom_, a) != L.bottom_)
        throw LatticeError("bottom is not annihilating at " + L.names_[a]);
    }

    L.laws_.associative = true;
    L.laws_.exchange = true;
    L.laws_.weakening = true;
    L.laws_.contraction = true;
    for (int a = 0; a < L.n_; ++a)
      for (int b = 0; b < L.n_; ++b) {
        if (L.fuse(a, b) != L.fuse(b, a)) L.laws_.exchange = false;
        if (!L.leq(L.fuse(b, a), a)) L.laws_.weakening = false;
        if (!L.leq(L.meet(a, b), L.fuse(a, b))) L.laws_.contraction = false;
        for (int c = 0; c < L.n_; ++c)
          if (L.fuse(L.fuse(a, b), c) != L.fuse(a, L.fuse(b, c))) L.laws_.associative = false;
      }
    return L;
  }

  int size() const { return n_; }
  const std::string& name(int a) const { return names_[a]; }
  int element(const std::string& nm) const {
    for (int i = 0; i < n_; ++i)
      if (names_[i] == nm) return i;
    return -1;
  }
  bool leq(int a, int b) const { return leq_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int fuse(int a, int b) const { return fuse_[idx(a, b)]; }
  int rimp(int a, int c) const { return rimp_[idx(a, c)]; }
  int limp(int c, int b) const { return limp_[idx(c, b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Laws& laws() const { return laws_; }
  const std::string& describe() const { return describe_; }
  void set_describe(std::string d) { describe_ = std::move(d); }

  std::string to_text() const {
    std::ostringstream os;
    os << "lattice\nelems";
    for (const auto& nm : names_) os << ' ' << nm;
    os << '\n';
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (a != b && leq(a, b)) os << "leq " << names_[a] << ' ' << names_[b] << '\n';
    auto table = [&](const char* op, const std::vector<int>& t) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          os << op << ' ' << names_[a] << ' ' << names_[b] << " = " << names_[t[idx(a, b)]]
             << '\n';
    };
    table("fuse", fuse_);
    table("rimp", rimp_);
    table("limp", limp_);
    os << "end\n";
    return os.str();
  }

  // All residuated fusion tables over the chain and diamond skeletons of at
  // most max_size elements, in deterministic order.
  static std::vector<ResiduatedLattice> catalog(int max_size);

 private:
  size_t idx(int a, int b) const { return (size_t)a * n_ + b; }
  void set_leq(int a, int b) { leq_[idx(a, b)] = true; }
  void range(int a) const {
    if (a < 0 || a >= n_) throw LatticeError("element index out of range");
  }
  // Greatest lower / least upper bound, -1 when absent.
  int bound(int a, int b, bool lower) const {
    int best = -1;
    for (int c = 0; c < n_; ++c) {
      bool cand = lower ? (leq(c, a) && leq(c, b)) : (leq(a, c) && leq(b, c));
      if (!cand) continue;
      if (best < 0) {
        best = c;
        continue;
      }
      if (lower ? leq(best, c) : leq(c, best)) best = c;
    }
    if (best < 0) return -1;
    for (int c = 0; c < n_; ++c) {
      bool cand = lower ? (leq(c, a) && leq(c, b)) : (leq(a, c) && leq(b, c));
      if (cand && !(lower ? leq(c, best) : leq(best, c))) return -1;
    }
    return best;
  }

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<int> meet_, join_, fuse_, rimp_, limp_;
  int bottom_ = 0, top_ = 0;
  Laws laws_{};
  std::string describe_;
};

namespace detail {

struct Skeleton {
  std::string tag;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> leq;
};

inline std::vector<Skeleton> lattice_skeletons(int max_size) {
  std::vector<Skeleton> out;
  if (max_size >= 2) out.push_back({"chain2", {"0", "1"}, {{0, 1}}});
  if (max_size >= 3) out.push_back({"chain3", {"0", "a", "1"}, {{0, 1}, {1, 2}}});
  if (max_size >= 4) {
    out.push_back({"chain4", {"0", "a", "b", "1"}, {{0, 1}, {1, 2}, {2, 3}}});
    out.push_back({"diamond4", {"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}});
  }
  return out;
}

}  // namespace detail

inline std::vector<ResiduatedLattice> ResiduatedLattice::catalog(int max_size) {
  std::vector<ResiduatedLattice> out;
  for (const auto& sk : detail::lattice_skeletons(max_size)) {
    // Order-only validation pass to get meets and joins for the skeleton.
    Tables probe;
    probe.names = sk.names;
    probe.leq = sk.leq;
    int n = (int)sk.names.size();
    probe.fuse.assign((size_t)n * n, 0);
    ResiduatedLattice order = validate(probe);

    int cells = (n - 1) * (n - 1);
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= n;
    for (long code = 0; code < total; ++code) {
      std::vector<int> fuse((size_t)n * n, 0);
      long c = code;
      for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
          fuse[(size_t)a * n + b] = (int)(c % n);
          c /= n;
        }
      bool additive = true;
      for (int a = 0; a < n && additive; ++a)
        for (int b = 0; b < n && additive; ++b)
          for (int e = 0; e < n && additive; ++e) {
            int j = order.join(a, b);
            if (fuse[(size_t)j * n + e] !=
                order.join(fuse[(size_t)a * n + e], fuse[(size_t)b * n + e]))
              additive = false;
            if (fuse[(size_t)e * n + j] !=
                order.join(fuse[(size_t)e * n + a], fuse[(size_t)e * n + b]))
              additive = false;
          }
      if (!additive) continue;
      Tables t;
      t.names = sk.names;
      t.leq = sk.leq;
      t.fuse = fuse;
      ResiduatedLattice L = validate(t);
      L.set_describe(sk.tag + "#" + std::to_string(code));
      out.push_back(std::move(L));
    }
  }
  return out;
}

// Line-oriented lattice files:
//   lattice
//   elems 0 a 1
//   leq 0 a
//   fuse a a = a
//   rimp a a = 1      (rimp/limp lines may be omitted; residuals are computed)
//   end
inline ResiduatedLattice load_lattice_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  bool started = false, ended = false;
  ResiduatedLattice::Tables t;
  struct OpLine {
    std::string op, a, b, v;
    int line_no;
  };
  std::vector<OpLine> ops;
  std::vector<std::tuple<std::string, std::string, int>> leq_lines;

  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> w;
    std::string word;
    while (ls >> word) w.push_back(word);
    if (w.empty()) continue;
    if (ended) throw LatticeError("line " + std::to_string(line_no) + ": content after 'end'");
    if (!started) {
      if (w[0] != "lattice")
        throw LatticeError("line " + std::to_string(line_no) + ": expected 'lattice' header");
      started = true;
      continue;
    }
    if (w[0] == "elems") {
      t.names.insert(t.names.end(), w.begin() + 1, w.end());
    } else if (w[0] == "leq") {
      if (w.size() != 3)
        throw LatticeError("line " + std::to_string(line_no) + ": 'leq' expects two elements");
      leq_lines.push_back({w[1], w[2], line_no});
    } else if (w[0] == "fuse" || w[0] == "rimp" || w[0] == "limp") {
      if (w.size() != 5 || w[3] != "=")
        throw LatticeError("line " + std::to_string(line_no) +
                           ": expected '" + w[0] + " a b = c'");
      ops.push_back({w[0], w[1], w[2], w[4], line_no});
    } else if (w[0] == "end") {
      ended = true;
    } else {
      throw LatticeError("line " + std::to_string(line_no) + ": unknown directive '" + w[0] + "'");
    }
  }
  if (!started) throw LatticeError("empty input: expected a 'lattice' block");
  if (!ended) throw LatticeError("missing 'end'");

  int n = (int)t.names.size();
  auto index = [&](const std::string& nm, int ln) {
    for (int i = 0; i < n; ++i)
      if (t.names[i] == nm) return i;
    throw LatticeError("line " + std::to_string(ln) + ": unknown element '" + nm + "'");
  };
  for (auto& [a, b, ln] : leq_lines) t.leq.push_back({index(a, ln), index(b, ln)});
  t.fuse.assign((size_t)n * n, -1);
  std::vector<int> rimp((size_t)n * n, -1), limp((size_t)n * n, -1);
  bool has_rimp = false, has_limp = false;
  for (const auto& o : ops) {
    int a = index(o.a, o.line_no), b = index(o.b, o.line_no), v = index(o.v, o.line_no);
    if (o.op == "fuse") t.fuse[(size_t)a * n + b] = v;
    if (o.op == "rimp") {
      rimp[(size_t)a * n + b] = v;
      has_rimp = true;
    }
    if (o.op == "limp") {
      limp[(size_t)a * n + b] = v;
      has_limp = true;
    }
  }
  for (int i = 0; i < n * n; ++i)
    if (t.fuse[i] < 0) throw LatticeError("fuse table is not total");
  if (has_rimp) {
    for (int i = 0; i < n * n; ++i)
      if (rimp[i] < 0) throw LatticeError("rimp table is not total");
    t.rimp = rimp;
  }
  if (has_limp) {
    for (int i = 0; i < n * n; ++i)
      if (limp[i] < 0) throw LatticeError("limp table is not total");
    t.limp = limp;
  }
  return ResiduatedLattice::validate(t);
}

inline ResiduatedLattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LatticeError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_lattice_text(ss.str());
}

}  // namespace polarity
