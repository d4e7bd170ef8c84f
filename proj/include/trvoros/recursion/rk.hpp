#pragma once

#include <string>
#include <vector>

namespace trv {

// One factor W_{g, |t| + |args|}(t, z_args) of a term of R^(k).
struct RBlock {
  int g = 0;
  std::vector<int> t;     // indices into t_1..t_k (0-based)
  std::vector<int> args;  // indices into z_1..z_n (0-based)
};
using RTerm = std::vector<RBlock>;

// Set partitions of {0, ..., k-1}, blocks listed by smallest element.
std::vector<std::vector<std::vector<int>>> set_partitions(int k);

// Terms of R^(k) W_{g,n+1}(t_1..t_k; z_1..z_n): set partitions of t, ordered
// splittings of the z's over the blocks, genus tuples summing to g + l - k,
// with (g_i, |mu_i| + |I_i|) = (0, 1) blocks removed. Blocks with a negative
// genus never appear.
std::vector<RTerm> r_operator_terms(int k, int g, int n);

// R^(0) W_{g,n+1} = delta_{g,0} delta_{n,0}.
int r_operator_zero(int g, int n);

// Human-readable sum, e.g. "W_{0,3}(t1,t2,z1) + W_{0,2}(t1,z1) W_{1,1}(t2)".
std::string r_terms_str(const std::vector<RTerm>& terms);

}  // namespace trv
