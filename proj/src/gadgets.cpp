#include "congestlb/gadgets.hpp"
#include "congestlb/errors.hpp"

#include <algorithm>
#include <string>

namespace congestlb::gadgets {

namespace {

using NL = NodeLabel;

struct Setup {
  unsigned k;
  unsigned w;  // log2 k
};

Setup check_params(Construction c, const ConstructionParams& params, const BitInput& input) {
  if (params.k < 4) throw PreconditionError("k must be a power of two >= 4 (got " + std::to_string(params.k) + ")");
  unsigned w = log2_exact(params.k);
  if (params.P < 1) throw PreconditionError("P must be >= 1");
  if (params.shaved && c != Construction::RadiusExact && c != Construction::RadiusApprox)
    throw PreconditionError("only the radius constructions have a shaved variant");
  if (input.polarity != polarity_for(c))
    throw PreconditionError(std::string(construction_name(c)) + " uses polarity " +
                            std::string(polarity_name(polarity_for(c))));
  std::size_t want = required_input_length(c, params.k, params.shaved);
  if (input.sa.size() != want || input.sb.size() != want)
    throw PreconditionError("input strings must have length " + std::to_string(want) + " (got " +
                            std::to_string(input.sa.size()) + " and " + std::to_string(input.sb.size()) + ")");
  return {params.k, w};
}

InstanceMeta meta_for(Construction c, const ConstructionParams& params) {
  InstanceMeta m;
  m.construction = c;
  m.k = params.k;
  m.P = params.P;
  m.shaved = params.shaved;
  return m;
}

// bit node of index i at position j on the L side (f/t) or R side (f'/t')
NL l_bit(unsigned i, unsigned j, Copy c = Copy::None) {
  return bit_of(i, j) ? NL::t(static_cast<int>(j), c) : NL::f(static_cast<int>(j), c);
}
NL r_bit(unsigned i, unsigned j, Copy c = Copy::None) {
  return bit_of(i, j) ? NL::t_prime(static_cast<int>(j), c) : NL::f_prime(static_cast<int>(j), c);
}

int I(unsigned v) { return static_cast<int>(v); }

// Stretched core shared by diameter_approx, eccentricity and radius_approx.
struct StretchedCore {
  bool l_prime_paths;  // L'-L paths inside the core (diameter_approx)
  bool hub_paths;      // (F u T)-l_{k+1} paths
  int hub_length;      // length of the l_k - l_{k+1} path
  bool split_hubs;     // shaved radius_approx: l_{k+1} becomes a collector with log k split hubs
};

void stretched_core(GraphBuilder& b, const Setup& s, unsigned P, const StretchedCore& opt, Copy c) {
  const int p = I(P);
  for (unsigned i = 0; i < s.k; ++i) {
    b.add_path(NL::l(I(i), c), NL::hub_l(0, c), p);
    b.add_path(NL::r(I(i), c), NL::hub_r(0, c), p);
    for (unsigned j = 0; j < s.w; ++j) {
      b.add_path(NL::l(I(i), c), l_bit(i, j, c), p);
      b.add_path(NL::r(I(i), c), r_bit(i, j, c), p);
    }
    if (opt.l_prime_paths) b.add_path(NL::l_prime(I(i), c), NL::l(I(i), c), p);
    b.add_path(NL::r_prime(I(i), c), NL::r(I(i), c), p);
  }
  b.add_path(NL::hub_l(0, c), NL::hub_l(1, c), opt.hub_length);
  b.add_path(NL::hub_r(0, c), NL::hub_r(1, c), opt.hub_length);
  if (opt.split_hubs) {
    for (unsigned j = 0; j < s.w; ++j) {
      b.add_path(NL::hub_l(1, c), NL::hub_l_split(I(j), c), p);
      b.add_path(NL::hub_r(1, c), NL::hub_r_split(I(j), c), p);
      b.add_edge(NL::hub_l_split(I(j), c), NL::hub_r_split(I(j), c));
    }
  } else {
    b.add_edge(NL::hub_l(1, c), NL::hub_r(1, c));
  }
  for (unsigned j = 0; j < s.w; ++j) {
    b.add_edge(NL::f(I(j), c), NL::t_prime(I(j), c));
    b.add_edge(NL::t(I(j), c), NL::f_prime(I(j), c));
    if (opt.hub_paths) {
      b.add_path(NL::f(I(j), c), NL::hub_l(1, c), p);
      b.add_path(NL::t(I(j), c), NL::hub_l(1, c), p);
      b.add_path(NL::f_prime(I(j), c), NL::hub_r(1, c), p);
      b.add_path(NL::t_prime(I(j), c), NL::hub_r(1, c), p);
    }
  }
}

}  // namespace

Polarity polarity_for(Construction c) {
  switch (c) {
    case Construction::DiameterExact:
    case Construction::DiameterApprox:
      return Polarity::EdgeOnZero;
    default:
      return Polarity::EdgeOnOne;
  }
}

std::size_t required_input_length(Construction c, unsigned k, bool shaved) {
  if (shaved && (c == Construction::RadiusExact || c == Construction::RadiusApprox))
    return static_cast<std::size_t>(k) * log2_exact(k);
  return k;
}

std::size_t expected_cut_size(Construction c, unsigned k, bool shaved) {
  const std::size_t w = log2_exact(k);
  switch (c) {
    case Construction::DiameterExact:
      return 2 * w + 2;
    case Construction::RadiusExact:
      return shaved ? 3 * w : 2 * w + 1;
    case Construction::RadiusApprox:
      return shaved ? 2 * (3 * w) : 2 * (2 * w + 1);
    case Construction::DiameterApprox:
    case Construction::Eccentricity:
    case Construction::RadiusConstDegree:
    case Construction::Spanner:
      return 2 * w + 1;
  }
  throw std::logic_error("unknown construction");
}

BitInput make_input(Construction c, Bits sa, Bits sb) { return {std::move(sa), std::move(sb), polarity_for(c)}; }

Instance diameter_exact(const ConstructionParams& params, const BitInput& input) {
  const auto s = check_params(Construction::DiameterExact, params, input);
  InstanceMeta meta = meta_for(Construction::DiameterExact, params);
  meta.P = 1;
  InstanceAssembler as(meta, input);
  auto& b = as.builder();
  const NL lk = NL::hub_l(0), lk1 = NL::hub_l(1), rk = NL::hub_r(0), rk1 = NL::hub_r(1);
  for (unsigned i = 0; i < s.k; ++i) {
    b.add_edge(NL::l(I(i)), lk);
    b.add_edge(NL::r(I(i)), rk);
    for (unsigned j = 0; j < s.w; ++j) {
      b.add_edge(NL::l(I(i)), l_bit(i, j));
      b.add_edge(NL::r(I(i)), r_bit(i, j));
    }
  }
  b.add_edge(lk, lk1);
  b.add_edge(rk, rk1);
  b.add_edge(lk1, rk1);
  for (unsigned j = 0; j < s.w; ++j) {
    b.add_edge(NL::f(I(j)), NL::t_prime(I(j)));
    b.add_edge(NL::t(I(j)), NL::f_prime(I(j)));
    b.add_edge(NL::a(), NL::f(I(j)));
    b.add_edge(NL::a(), NL::t(I(j)));
    b.add_edge(NL::b(), NL::f_prime(I(j)));
    b.add_edge(NL::b(), NL::t_prime(I(j)));
  }
  b.add_edge(NL::a(), lk);
  b.add_edge(NL::a(), lk1);
  b.add_edge(NL::b(), rk);
  b.add_edge(NL::b(), rk1);
  b.add_edge(NL::a(), NL::b());
  for (unsigned i = 0; i < s.k; ++i) {
    if (!input.sa[i]) as.add_input_edge(NL::l(I(i)), lk1);
    if (!input.sb[i]) as.add_input_edge(NL::r(I(i)), rk1);
  }
  return as.finish();
}

Instance diameter_approx(const ConstructionParams& params, const BitInput& input) {
  const auto s = check_params(Construction::DiameterApprox, params, input);
  InstanceAssembler as(meta_for(Construction::DiameterApprox, params), input);
  stretched_core(as.builder(), s, params.P, {true, true, I(params.P), false}, Copy::None);
  for (unsigned i = 0; i < s.k; ++i) {
    if (!input.sa[i]) as.add_input_edge(NL::l(I(i)), NL::hub_l(1));
    if (!input.sb[i]) as.add_input_edge(NL::r(I(i)), NL::hub_r(1));
  }
  return as.finish();
}

Instance eccentricity_gadget(const ConstructionParams& params, const BitInput& input) {
  const auto s = check_params(Construction::Eccentricity, params, input);
  InstanceAssembler as(meta_for(Construction::Eccentricity, params), input);
  const int p = I(params.P);
  stretched_core(as.builder(), s, params.P, {false, false, 2 * p, false}, Copy::None);
  for (unsigned i = 0; i < s.k; ++i) {
    if (input.sa[i]) as.add_input_path(NL::l(I(i)), NL::hub_l(1), p, 1);
    if (input.sb[i]) as.add_input_path(NL::r(I(i)), NL::hub_r(1), p, 1);
  }
  return as.finish();
}

Instance radius_approx(const ConstructionParams& params, const BitInput& input) {
  const auto s = check_params(Construction::RadiusApprox, params, input);
  InstanceAssembler as(meta_for(Construction::RadiusApprox, params), input);
  auto& b = as.builder();
  const int p = I(params.P);
  // Shaved: the 2P hub path is cut at its midpoint; l_{k+1} stays as the
  // collector and each split hub hangs P further away.
  const StretchedCore opt{false, false, params.shaved ? p : 2 * p, params.shaved};
  for (Copy c : {Copy::One, Copy::Two}) {
    stretched_core(b, s, params.P, opt, c);
    for (unsigned i = 0; i < s.k; ++i) b.add_path(NL::l_prime(I(i)), NL::l(I(i), c), p);
  }
  for (Copy c : {Copy::One, Copy::Two}) {
    for (unsigned i = 0; i < s.k; ++i) {
      if (!params.shaved) {
        if (input.sa[i]) as.add_input_path(NL::l(I(i), c), NL::hub_l(1, c), p, 1);
        if (input.sb[i]) as.add_input_path(NL::r(I(i), c), NL::hub_r(1, c), p, 1);
        continue;
      }
      for (unsigned j = 0; j < s.w; ++j) {
        std::size_t bit = static_cast<std::size_t>(i) * s.w + j;
        if (input.sa[bit]) as.add_input_path(NL::l(I(i), c), NL::hub_l_split(I(j), c), p, 1);
        if (input.sb[bit]) as.add_input_path(NL::r(I(i), c), NL::hub_r_split(I(j), c), p, 1);
      }
    }
  }
  return as.finish();
}

Instance radius_exact(const ConstructionParams& params, const BitInput& input) {
  const auto s = check_params(Construction::RadiusExact, params, input);
  InstanceMeta meta = meta_for(Construction::RadiusExact, params);
  meta.P = 1;
  InstanceAssembler as(meta, input);
  auto& b = as.builder();
  const NL lk = NL::hub_l(0), rk = NL::hub_r(0);
  for (unsigned i = 0; i < s.k; ++i) {
    b.add_edge(NL::l(I(i)), lk);
    b.add_edge(NL::r(I(i)), rk);
    b.add_edge(NL::l(I(i)), NL::x(1));
    for (unsigned j = 0; j < s.w; ++j) {
      b.add_edge(NL::l(I(i)), l_bit(i, j));
      b.add_edge(NL::r(I(i)), r_bit(i, j));
    }
  }
  b.add_edge(NL::x(1), NL::x(2));
  b.add_edge(NL::x(2), NL::x(3));
  for (unsigned j = 0; j < s.w; ++j) {
    b.add_edge(NL::f(I(j)), NL::t_prime(I(j)));
    b.add_edge(NL::t(I(j)), NL::f_prime(I(j)));
    b.add_edge(NL::f(I(j)), NL::t(I(j)));
    b.add_edge(NL::f_prime(I(j)), NL::t_prime(I(j)));
  }
  if (!params.shaved) {
    const NL lk1 = NL::hub_l(1), rk1 = NL::hub_r(1);
    b.add_edge(lk, lk1);
    b.add_edge(rk, rk1);
    b.add_edge(lk1, rk1);
    for (unsigned i = 0; i < s.k; ++i) {
      if (input.sa[i]) as.add_input_edge(NL::l(I(i)), lk1);
      if (input.sb[i]) as.add_input_edge(NL::r(I(i)), rk1);
    }
  } else {
    for (unsigned j = 0; j < s.w; ++j) {
      b.add_edge(lk, NL::hub_l_split(I(j)));
      b.add_edge(rk, NL::hub_r_split(I(j)));
      b.add_edge(NL::hub_l_split(I(j)), NL::hub_r_split(I(j)));
    }
    for (unsigned i = 0; i < s.k; ++i)
      for (unsigned j = 0; j < s.w; ++j) {
        std::size_t bit = static_cast<std::size_t>(i) * s.w + j;
        if (input.sa[bit]) as.add_input_edge(NL::l(I(i)), NL::hub_l_split(I(j)));
        if (input.sb[bit]) as.add_input_edge(NL::r(I(i)), NL::hub_r_split(I(j)));
      }
  }
  return as.finish();
}

Instance radius_const_degree(const ConstructionParams& params, const BitInput& input) {
  const auto s = check_params(Construction::RadiusConstDegree, params, input);
  unsigned v = 0;
  try {
    v = log2_exact(s.w);
  } catch (const PreconditionError&) {
    throw PreconditionError("radius-const-degree needs log2(k) to be a power of two (k = " + std::to_string(s.k) + ")");
  }
  if (v < 2) throw PreconditionError("radius-const-degree needs k >= 16 so that the loglog k - 1 paths are non-empty");
  InstanceMeta meta = meta_for(Construction::RadiusConstDegree, params);
  meta.P = 1;
  InstanceAssembler as(meta, input);
  auto& b = as.builder();
  const NL lk = NL::hub_l(0), lk1 = NL::hub_l(1), rk = NL::hub_r(0), rk1 = NL::hub_r(1);

  // radius_exact skeleton without x3 and without input edges
  for (unsigned j = 0; j < s.w; ++j) {
    b.add_edge(NL::f(I(j)), NL::t(I(j)));
    b.add_edge(NL::f_prime(I(j)), NL::t_prime(I(j)));
    b.add_edge(NL::f(I(j)), NL::t_prime(I(j)));
    b.add_edge(NL::t(I(j)), NL::f_prime(I(j)));
  }
  b.add_edge(lk, lk1);
  b.add_edge(rk, rk1);
  b.add_edge(lk1, rk1);

  std::vector<NL> L, R;
  for (unsigned i = 0; i < s.k; ++i) {
    L.push_back(NL::l(I(i)));
    R.push_back(NL::r(I(i)));
  }
  // x1 reaches L through a tree of height log k, x2 sits log k + 2 loglog k - 1 further
  for (const auto& l : L) b.add_edge(NL::x(1), l);
  attach_tree(b, NL::x(1), 0, L, TreeLeaves::Neighbors);
  b.add_path(NL::x(1), NL::x(2), I(s.w + 2 * v - 1));

  // each l_i reaches its log k bit nodes through a tree of height loglog k
  for (unsigned i = 0; i < s.k; ++i) {
    std::vector<NL> lb, rb;
    for (unsigned j = 0; j < s.w; ++j) {
      lb.push_back(l_bit(i, j));
      rb.push_back(r_bit(i, j));
      b.add_edge(L[i], lb.back());
      b.add_edge(R[i], rb.back());
    }
    attach_tree(b, L[i], 0, lb, TreeLeaves::Neighbors);
    attach_tree(b, R[i], 0, rb, TreeLeaves::Neighbors);
  }
  // each bit node splits its k/2 tree parents
  for (unsigned j = 0; j < s.w; ++j) {
    for (const NL& u : {NL::f(I(j)), NL::t(I(j)), NL::f_prime(I(j)), NL::t_prime(I(j))}) {
      std::vector<NL> parents;
      for (const auto& x : b.neighbors(u))
        if (x.role() == Role::Tree) parents.push_back(x);
      attach_tree(b, u, 0, parents, TreeLeaves::Split);
    }
  }
  // paths of length loglog k - 1 to l_k and l_{k+1}, whose ends then split
  std::vector<NL> q_l, q_r;
  for (int side = 0; side < 2; ++side) {
    const auto& S = side == 0 ? L : R;
    const NL& hk = side == 0 ? lk : rk;
    const NL& hk1 = side == 0 ? lk1 : rk1;
    const NL& other1 = side == 0 ? rk1 : lk1;
    for (const auto& x : S) b.add_path(x, hk, I(v - 1), 0);
    std::vector<NL> first;
    for (const auto& y : b.neighbors(hk))
      if (y != hk1) first.push_back(y);
    attach_tree(b, hk, 0, first, TreeLeaves::Split);

    for (const auto& x : S) b.add_path(x, hk1, I(v - 1), 1);
    first.clear();
    for (const auto& y : b.neighbors(hk1))
      if (y != hk && y != other1) first.push_back(y);
    auto leaves = attach_tree(b, hk1, 0, first, TreeLeaves::Split);
    auto& q = side == 0 ? q_l : q_r;
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (v - 1 >= 2) {
        q.push_back(NL::path(S[i], hk1, 1, 1));
      } else {
        // path of length 1: the route's first hop is the split leaf
        auto it = std::find(first.begin(), first.end(), S[i]);
        q.push_back(leaves[static_cast<std::size_t>(it - first.begin())]);
      }
    }
  }
  // bit 0 removes the first hop of l_i's route to l_{k+1}
  for (unsigned i = 0; i < s.k; ++i) {
    if (!input.sa[i])
      b.remove_edge(L[i], q_l[i]);
    else
      as.mark_input_edge(L[i], q_l[i]);
    if (!input.sb[i])
      b.remove_edge(R[i], q_r[i]);
    else
      as.mark_input_edge(R[i], q_r[i]);
  }
  return as.finish();
}

Instance build(Construction c, const ConstructionParams& params, const BitInput& input) {
  switch (c) {
    case Construction::DiameterExact: return diameter_exact(params, input);
    case Construction::DiameterApprox: return diameter_approx(params, input);
    case Construction::RadiusExact: return radius_exact(params, input);
    case Construction::RadiusApprox: return radius_approx(params, input);
    case Construction::Eccentricity: return eccentricity_gadget(params, input);
    case Construction::RadiusConstDegree: return radius_const_degree(params, input);
    case Construction::Spanner: break;
  }
  throw PreconditionError("spanner instances are built by build_spanner_instance");
}

namespace {

bool stretch_holds(StretchProblem problem, const Rational& eps, unsigned P) {
  const Rational p(static_cast<std::int64_t>(P));
  switch (problem) {
    case StretchProblem::DiameterApprox:
      return (Rational(3, 2) - eps) * (4 * p + 2) < 6 * p + 1;
    case StretchProblem::RadiusApprox:
      return (Rational(3, 2) - eps) * (4 * p + 1) < 6 * p + 1;
    case StretchProblem::EccApprox:
      return (Rational(5, 3) - eps) * (3 * p + 1) < 5 * p + 1;
  }
  return false;
}

}  // namespace

unsigned min_stretch_P(StretchProblem problem, const Rational& eps) {
  const Rational upper = problem == StretchProblem::EccApprox ? Rational(2, 3) : Rational(1, 2);
  if (eps <= 0 || eps >= upper)
    throw PreconditionError("eps must lie strictly between 0 and " + to_string(upper) + " (got " + to_string(eps) + ")");
  // the inequalities are linear in P: P > threshold
  Rational threshold;
  switch (problem) {
    case StretchProblem::DiameterApprox: threshold = (1 - eps) / (2 * eps); break;
    case StretchProblem::RadiusApprox: threshold = (Rational(1, 2) - eps) / (4 * eps); break;
    case StretchProblem::EccApprox: threshold = (Rational(2, 3) - eps) / (3 * eps); break;
  }
  std::int64_t floor_t = threshold.numerator() / threshold.denominator();
  if (threshold < 0) floor_t = -1;
  unsigned P = static_cast<unsigned>(std::max<std::int64_t>(1, floor_t + 1));
  if (!stretch_holds(problem, eps, P) || (P > 1 && stretch_holds(problem, eps, P - 1)))
    throw std::logic_error("min_stretch_P closed form disagrees with the inequality");
  return P;
}

}  // namespace congestlb::gadgets
