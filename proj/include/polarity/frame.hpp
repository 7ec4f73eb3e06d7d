#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "common.hpp"

namespace polarity {

enum class FrameCondition { C1, C2, C3, C4 };
enum class FrameClassLabel { NFL, FL, BCI, BCK, BCW };

inline const char* label_name(FrameClassLabel l) {
  switch (l) {
    case FrameClassLabel::NFL: return "NFL";
    case FrameClassLabel::FL: return "FL";
    case FrameClassLabel::BCI: return "BCI";
    case FrameClassLabel::BCK: return "BCK";
    case FrameClassLabel::BCW: return "BCW";
  }
  return "?";
}

inline std::optional<FrameClassLabel> label_from_name(std::string s) {
  for (char& c : s) c = (char)std::tolower((unsigned char)c);
  if (s == "nfl") return FrameClassLabel::NFL;
  if (s == "fl") return FrameClassLabel::FL;
  if (s == "bci") return FrameClassLabel::BCI;
  if (s == "bck") return FrameClassLabel::BCK;
  if (s == "bcw") return FrameClassLabel::BCW;
  return std::nullopt;
}

inline std::vector<FrameCondition> class_conditions(FrameClassLabel l) {
  using C = FrameCondition;
  switch (l) {
    case FrameClassLabel::NFL: return {};
    case FrameClassLabel::FL: return {C::C1};
    case FrameClassLabel::BCI: return {C::C1, C::C2};
    case FrameClassLabel::BCK: return {C::C1, C::C2, C::C3};
    case FrameClassLabel::BCW: return {C::C1, C::C2, C::C4};
  }
  return {};
}

struct Triple {
  int x, z, zp;  // x R z z'
  friend bool operator<(const Triple& a, const Triple& b) {
    return std::tie(a.x, a.z, a.zp) < std::tie(b.x, b.z, b.zp);
  }
  friend bool operator==(const Triple& a, const Triple& b) {
    return a.x == b.x && a.z == b.z && a.zp == b.zp;
  }
};

// A finite two-sorted frame: carriers X and Y, the Galois relation between
// them, and a ternary relation on X. The complement I of the Galois relation
// must relate every point of either carrier to something (checked at
// construction); points are ordered by declaration and all set enumeration
// and witness reporting follow that order.
class TwoSortedFrame {
 public:
  static TwoSortedFrame make(std::vector<std::string> x_names, std::vector<std::string> y_names,
                             const std::vector<std::pair<int, int>>& gal_pairs,
                             const std::vector<Triple>& triples) {
    TwoSortedFrame f;
    f.nx_ = (int)x_names.size();
    f.ny_ = (int)y_names.size();
    if (f.nx_ == 0 || f.ny_ == 0) throw FrameError("both carriers must be non-empty");
    if (f.nx_ > kMaxPoints || f.ny_ > kMaxPoints)
      throw FrameError("carrier too large (limit " + std::to_string(kMaxPoints) + " points)");
    f.xn_ = std::move(x_names);
    f.yn_ = std::move(y_names);
    f.gal_row_.assign(f.nx_, 0);
    f.gal_col_.assign(f.ny_, 0);
    for (auto [x, y] : gal_pairs) {
      if (x < 0 || x >= f.nx_ || y < 0 || y >= f.ny_) throw FrameError("galois pair out of range");
      f.gal_row_[x] |= unit_mask(y);
      f.gal_col_[y] |= unit_mask(x);
    }
    f.triples_ = triples;
    std::sort(f.triples_.begin(), f.triples_.end());
    f.triples_.erase(std::unique(f.triples_.begin(), f.triples_.end()), f.triples_.end());
    f.r_result_.assign((size_t)f.nx_ * f.nx_, 0);
    for (const Triple& t : f.triples_) {
      if (t.x < 0 || t.x >= f.nx_ || t.z < 0 || t.z >= f.nx_ || t.zp < 0 || t.zp >= f.nx_)
        throw FrameError("ternary triple out of range");
      f.r_result_[(size_t)t.z * f.nx_ + t.zp] |= unit_mask(t.x);
    }
    for (int x = 0; x < f.nx_; ++x)
      if (f.gal_row_[x] == f.y_all())
        throw FrameError("condition D fails: point " + f.xn_[x] +
                         " is Galois-related to every point of Y");
    for (int y = 0; y < f.ny_; ++y)
      if (f.gal_col_[y] == f.x_all())
        throw FrameError("condition D fails: point " + f.yn_[y] +
                         " is Galois-related to every point of X");
    return f;
  }

  int x_size() const { return nx_; }
  int y_size() const { return ny_; }
  Mask x_all() const { return full_mask(nx_); }
  Mask y_all() const { return full_mask(ny_); }
  const std::string& x_name(int i) const { return xn_[i]; }
  const std::string& y_name(int i) const { return yn_[i]; }
  int x_index(const std::string& n) const { return find(xn_, n); }
  int y_index(const std::string& n) const { return find(yn_, n); }

  bool gal(int x, int y) const { return mask_has(gal_row_[x], y); }
  Mask gal_row(int x) const { return gal_row_[x]; }
  Mask gal_col(int y) const { return gal_col_[y]; }
  Mask i_row(int x) const { return y_all() & ~gal_row_[x]; }
  Mask i_col(int y) const { return x_all() & ~gal_col_[y]; }
  bool i_rel(int x, int y) const { return !gal(x, y); }

  const std::vector<Triple>& triples() const { return triples_; }
  // {x | x R z z'}
  Mask r_result(int z, int zp) const { return r_result_[(size_t)z * nx_ + zp]; }
  bool r_has(int x, int z, int zp) const { return mask_has(r_result(z, zp), x); }

  // Galois connection generated by the frame relation.
  Mask polar_right(Mask u) const {
    Mask acc = y_all();
    for_each_point(u, [&](int x) { acc &= gal_row_[x]; });
    return acc;
  }
  Mask polar_left(Mask v) const {
    Mask acc = x_all();
    for_each_point(v, [&](int y) { acc &= gal_col_[y]; });
    return acc;
  }

  // Residuated pair generated by I, plus the complement-derived box-up and
  // diamond-down.
  Mask dia_up(Mask u) const {
    Mask acc = 0;
    for_each_point(u, [&](int x) { acc |= i_row(x); });
    return acc;
  }
  Mask box_down(Mask v) const {
    Mask acc = 0;
    for (int x = 0; x < nx_; ++x)
      if (subset_of(i_row(x), v)) acc |= unit_mask(x);
    return acc;
  }
  Mask box_up(Mask u) const { return y_all() & ~dia_up(x_all() & ~u); }
  Mask dia_down(Mask v) const { return x_all() & ~box_down(y_all() & ~v); }

  Mask closure_x(Mask u) const {
    Mask c = polar_left(polar_right(u));
    internal_check(c == box_down(dia_up(u)), "closure_x: polar route differs from modal route");
    return c;
  }
  Mask closure_y(Mask v) const {
    Mask c = polar_right(polar_left(v));
    internal_check(c == box_up(dia_down(v)), "closure_y: polar route differs from modal route");
    return c;
  }
  bool stable_x(Mask u) const { return closure_x(u) == u; }
  bool costable_y(Mask v) const { return closure_y(v) == v; }

  std::vector<Mask> stable_sets(int bound = 12) const {
    if (nx_ > bound)
      throw FrameError("stable-set enumeration over " + std::to_string(nx_) +
                       " points exceeds the bound of " + std::to_string(bound));
    std::vector<Mask> out;
    for (Mask u = 0; u <= x_all(); ++u)
      if (stable_x(u)) out.push_back(u);
    return out;
  }
  std::vector<Mask> costable_sets(int bound = 12) const {
    if (ny_ > bound)
      throw FrameError("co-stable-set enumeration over " + std::to_string(ny_) +
                       " points exceeds the bound of " + std::to_string(bound));
    std::vector<Mask> out;
    for (Mask v = 0; v <= y_all(); ++v)
      if (costable_y(v)) out.push_back(v);
    return out;
  }

  // The preorder {x}-polar inclusion induces on each carrier.
  bool preceq_x(int a, int b) const { return subset_of(gal_row_[a], gal_row_[b]); }
  bool preceq_y(int a, int b) const { return subset_of(gal_col_[a], gal_col_[b]); }
  Mask gamma_x(int x) const {
    Mask acc = 0;
    for (int z = 0; z < nx_; ++z)
      if (preceq_x(x, z)) acc |= unit_mask(z);
    return acc;
  }
  Mask gamma_y(int y) const {
    Mask acc = 0;
    for (int v = 0; v < ny_; ++v)
      if (preceq_y(y, v)) acc |= unit_mask(v);
    return acc;
  }
  bool increasing_x(Mask u) const {
    bool ok = true;
    for_each_point(u, [&](int x) { ok = ok && subset_of(gamma_x(x), u); });
    return ok;
  }

  // (R z z')-polar: the dual relation evaluated at a pair of X points.
  Mask r_dual(int z, int zp) const { return polar_right(r_result(z, zp)); }

  struct ConditionResult {
    bool holds = true;
    std::vector<int> witness;  // C1: (w,z,u,v); C2, C3: (x,z,z'); C4: (x)
  };

  ConditionResult check_condition(FrameCondition c) const {
    switch (c) {
      case FrameCondition::C1:
        for (int w = 0; w < nx_; ++w)
          for (int z = 0; z < nx_; ++z)
            for (int u = 0; u < nx_; ++u)
              for (int v = 0; v < nx_; ++v) {
                bool lhs = false, rhs = false;
                for (int x = 0; x < nx_ && !lhs; ++x)
                  lhs = r_has(x, u, v) && r_has(z, x, w);
                for (int x = 0; x < nx_ && !rhs; ++x)
                  rhs = r_has(x, v, w) && r_has(z, u, x);
                if (lhs != rhs) return {false, {w, z, u, v}};
              }
        return {};
      case FrameCondition::C2:
        for (int x = 0; x < nx_; ++x)
          for (int z = 0; z < nx_; ++z)
            for (int zp = 0; zp < nx_; ++zp)
              if (r_has(x, z, zp) != r_has(x, zp, z)) return {false, {x, z, zp}};
        return {};
      case FrameCondition::C3:
        for (int x = 0; x < nx_; ++x)
          for (int z = 0; z < nx_; ++z)
            for (int zp = 0; zp < nx_; ++zp)
              if (r_has(x, z, zp) && !preceq_x(zp, x)) return {false, {x, z, zp}};
        return {};
      case FrameCondition::C4:
        for (int x = 0; x < nx_; ++x)
          if (!r_has(x, x, x)) return {false, {x}};
        return {};
    }
    return {};
  }

  // The Boolean-strength variant of C3 (z' = x instead of z' below x). Not
  // tied to any frame class; exposed for experiments only.
  ConditionResult check_c3_boolean() const {
    for (int x = 0; x < nx_; ++x)
      for (int z = 0; z < nx_; ++z)
        for (int zp = 0; zp < nx_; ++zp)
          if (r_has(x, z, zp) && zp != x) return {false, {x, z, zp}};
    return {};
  }

  std::vector<FrameClassLabel> classify() const {
    bool c1 = check_condition(FrameCondition::C1).holds;
    bool c2 = c1 && check_condition(FrameCondition::C2).holds;
    bool c3 = c2 && check_condition(FrameCondition::C3).holds;
    bool c4 = c2 && check_condition(FrameCondition::C4).holds;
    std::vector<FrameClassLabel> out{FrameClassLabel::NFL};
    if (c1) out.push_back(FrameClassLabel::FL);
    if (c2) out.push_back(FrameClassLabel::BCI);
    if (c3) out.push_back(FrameClassLabel::BCK);
    if (c4) out.push_back(FrameClassLabel::BCW);
    return out;
  }

  bool in_class(FrameClassLabel l) const {
    for (FrameCondition c : class_conditions(l))
      if (!check_condition(c).holds) return false;
    return true;
  }

  std::string x_set_text(Mask m) const { return set_text(m, xn_); }
  std::string y_set_text(Mask m) const { return set_text(m, yn_); }

  // Frame block without the closing 'end' (valuation lines may follow).
  std::string body_text() const {
    std::ostringstream os;
    os << "frame\n";
    os << "X";
    for (const auto& n : xn_) os << ' ' << n;
    os << "\nY";
    for (const auto& n : yn_) os << ' ' << n;
    os << '\n';
    for (int x = 0; x < nx_; ++x)
      for (int y = 0; y < ny_; ++y)
        if (gal(x, y)) os << "G " << xn_[x] << ' ' << yn_[y] << '\n';
    for (const Triple& t : triples_)
      os << "R " << xn_[t.x] << ' ' << xn_[t.z] << ' ' << xn_[t.zp] << '\n';
    return os.str();
  }

  std::string to_text() const { return body_text() + "end\n"; }

 private:
  static int find(const std::vector<std::string>& v, const std::string& n) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] == n) return (int)i;
    return -1;
  }
  static std::string set_text(Mask m, const std::vector<std::string>& names) {
    if (m == 0) return "{}";
    std::string out = "{";
    bool first = true;
    for_each_point(m, [&](int i) {
      if (!first) out += ' ';
      out += names[i];
      first = false;
    });
    out += '}';
    return out;
  }

  int nx_ = 0, ny_ = 0;
  std::vector<std::string> xn_, yn_;
  std::vector<Mask> gal_row_, gal_col_;
  std::vector<Triple> triples_;
  std::vector<Mask> r_result_;
};

// A frame file together with any valuation lines it carries.
//   val p0 = x0 x1     substructural valuation (subsets of X)
//   val P0 = x0        sort-1 interpretation
//   val Q0 = y0        sort-2 interpretation
struct ModelFile {
  TwoSortedFrame frame;
  std::map<int, Mask> sub_vals;
  std::map<int, Mask> iota1;
  std::map<int, Mask> iota2;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

inline int val_atom_index(const std::string& name, int line_no) {
  if (name.size() < 2) throw FrameError("bad valuation name '" + name + "'", line_no);
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit((unsigned char)name[i]))
      throw FrameError("bad valuation name '" + name + "'", line_no);
  return std::stoi(name.substr(1));
}

}  // namespace detail

inline ModelFile load_model_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  bool started = false, ended = false;
  std::vector<std::string> xs, ys;
  struct ValLine {
    char kind;  // 'p', 'P' or 'Q'
    int atom;
    std::vector<std::string> points;
    int line_no;
  };
  std::vector<ValLine> vals;
  std::vector<std::pair<std::pair<std::string, std::string>, int>> gal_lines;
  std::vector<std::pair<std::array<std::string, 3>, int>> triple_lines;

  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto words = detail::split_ws(line);
    if (words.empty()) continue;
    if (ended) throw FrameError("content after 'end'", line_no);
    const std::string& d = words[0];
    if (!started) {
      if (d != "frame") throw FrameError("expected 'frame' header", line_no);
      started = true;
      continue;
    }
    if (d == "frame") throw FrameError("duplicate 'frame' header", line_no);
    if (d == "X") {
      xs.insert(xs.end(), words.begin() + 1, words.end());
    } else if (d == "Y") {
      ys.insert(ys.end(), words.begin() + 1, words.end());
    } else if (d == "G") {
      if (words.size() != 3) throw FrameError("'G' expects two point names", line_no);
      gal_lines.push_back({{words[1], words[2]}, line_no});
    } else if (d == "R") {
      if (words.size() != 4) throw FrameError("'R' expects three point names", line_no);
      triple_lines.push_back({{words[1], words[2], words[3]}, line_no});
    } else if (d == "val") {
      if (words.size() < 3 || words[2] != "=")
        throw FrameError("'val' expects 'val <name> = <points>'", line_no);
      char k = words[1].empty() ? '?' : words[1][0];
      if (k != 'p' && k != 'P' && k != 'Q')
        throw FrameError("valuation name must start with p, P or Q", line_no);
      vals.push_back({k, detail::val_atom_index(words[1], line_no),
                      std::vector<std::string>(words.begin() + 3, words.end()), line_no});
    } else if (d == "end") {
      if (words.size() != 1) throw FrameError("'end' takes no arguments", line_no);
      ended = true;
    } else {
      throw FrameError("unknown directive '" + d + "'", line_no);
    }
  }
  if (!started) throw FrameError("empty input: expected a 'frame' block");
  if (!ended) throw FrameError("missing 'end'", line_no);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) throw FrameError("duplicate X point '" + xs[i] + "'");
  for (size_t i = 0; i < ys.size(); ++i)
    for (size_t j = i + 1; j < ys.size(); ++j)
      if (ys[i] == ys[j]) throw FrameError("duplicate Y point '" + ys[i] + "'");
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (x == y) throw FrameError("point name '" + x + "' declared in both X and Y");

  auto x_index = [&](const std::string& n, int ln) {
    for (size_t i = 0; i < xs.size(); ++i)
      if (xs[i] == n) return (int)i;
    throw FrameError("unknown X point '" + n + "'", ln);
  };
  auto y_index = [&](const std::string& n, int ln) {
    for (size_t i = 0; i < ys.size(); ++i)
      if (ys[i] == n) return (int)i;
    throw FrameError("unknown Y point '" + n + "'", ln);
  };

  std::vector<std::pair<int, int>> gal;
  for (const auto& [g, ln] : gal_lines) gal.push_back({x_index(g.first, ln), y_index(g.second, ln)});
  std::vector<Triple> triples;
  for (const auto& [t, ln] : triple_lines)
    triples.push_back({x_index(t[0], ln), x_index(t[1], ln), x_index(t[2], ln)});

  ModelFile mf{TwoSortedFrame::make(xs, ys, gal, triples), {}, {}, {}};
  for (const auto& v : vals) {
    Mask m = 0;
    for (const auto& p : v.points)
      m |= unit_mask(v.kind == 'Q' ? y_index(p, v.line_no) : x_index(p, v.line_no));
    auto& target = v.kind == 'p' ? mf.sub_vals : (v.kind == 'P' ? mf.iota1 : mf.iota2);
    target[v.atom] = m;
  }
  return mf;
}

inline ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrameError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_model_text(ss.str());
}

inline std::string model_to_text(const ModelFile& mf) {
  std::ostringstream os;
  os << mf.frame.body_text();
  auto emit = [&](const std::map<int, Mask>& vals, char prefix, bool ys) {
    for (const auto& [atom, m] : vals) {
      os << "val " << prefix << atom << " =";
      for_each_point(m, [&](int i) {
        os << ' ' << (ys ? mf.frame.y_name(i) : mf.frame.x_name(i));
      });
      os << '\n';
    }
  };
  emit(mf.sub_vals, 'p', false);
  emit(mf.iota1, 'P', false);
  emit(mf.iota2, 'Q', true);
  os << "end\n";
  return os.str();
}

}  // namespace polarity
