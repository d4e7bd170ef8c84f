#include "trvoros/recursion/rk.hpp"

#include <functional>

namespace trv {

std::vector<std::vector<std::vector<int>>> set_partitions(int k) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      out.push_back(cur);
      return;
    }
    // cur may reallocate inside rec, so index rather than hold a reference.
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      rec(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    rec(i + 1);
    cur.pop_back();
  };
  if (k > 0) rec(0);
  return out;
}

std::vector<RTerm> r_operator_terms(int k, int g, int n) {
  std::vector<RTerm> out;
  for (const auto& mu : set_partitions(k)) {
    int l = static_cast<int>(mu.size());
    int gsum = g + l - k;
    if (gsum < 0) continue;
    // Assign each z_j to a block.
    std::vector<int> owner(n, 0);
    std::function<void(int)> assign = [&](int j) {
      if (j == n) {
        std::vector<RBlock> blocks(l);
        for (int i = 0; i < l; ++i) blocks[i].t = mu[i];
        for (int a = 0; a < n; ++a) blocks[owner[a]].args.push_back(a);
        std::vector<int> gs(l, 0);
        std::function<void(int, int)> genus = [&](int i, int left) {
          if (i == l - 1) {
            gs[i] = left;
            RTerm term = blocks;
            for (int b = 0; b < l; ++b) {
              term[b].g = gs[b];
              if (gs[b] == 0 && term[b].t.size() + term[b].args.size() == 1) return;
            }
            out.push_back(term);
            return;
          }
          for (int v = 0; v <= left; ++v) {
            gs[i] = v;
            genus(i + 1, left - v);
          }
        };
        genus(0, gsum);
        return;
      }
      for (int i = 0; i < l; ++i) {
        owner[j] = i;
        assign(j + 1);
      }
    };
    assign(0);
  }
  return out;
}

int r_operator_zero(int g, int n) { return (g == 0 && n == 0) ? 1 : 0; }

std::string r_terms_str(const std::vector<RTerm>& terms) {
  std::string s;
  for (const auto& term : terms) {
    if (!s.empty()) s += " + ";
    for (std::size_t b = 0; b < term.size(); ++b) {
      const auto& blk = term[b];
      if (b) s += " ";
      s += "W_{" + std::to_string(blk.g) + "," + std::to_string(blk.t.size() + blk.args.size()) + "}(";
      bool first = true;
      for (int i : blk.t) {
        s += (first ? "" : ",") + std::string("t") + std::to_string(i + 1);
        first = false;
      }
      for (int a : blk.args) {
        s += (first ? "" : ",") + std::string("z") + std::to_string(a + 1);
        first = false;
      }
      s += ")";
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace trv
