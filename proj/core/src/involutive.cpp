#include "floer/involutive.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace floer {

IotaData build_iota(const PointedDiagram& d, const LinearMap& psi) {
  LinearMap eta = eta_map(d);
  if (!(psi.source() == eta.target()) || !(psi.target() == eta.source()))
    throw std::invalid_argument(
        "build_iota: psi must map the conjugate-diagram complex to the diagram complex");
  if (psi.degree() != 0) throw std::invalid_argument("build_iota: psi must have degree 0");
  if (auto fail = psi.commutation_failure()) {
    std::ostringstream os;
    os << "build_iota: psi is not a chain map; commutation fails at " << std::get<0>(*fail)
       << " -> " << std::get<1>(*fail);
    throw std::invalid_argument(os.str());
  }
  IotaData out{d, psi, compose(psi, eta)};
  if (!out.iota.is_chain_map()) throw std::logic_error("build_iota: iota is not a chain map");
  return out;
}

IotaOrderReport iota_order(const LinearMap& iota, int max_power) {
  if (!(iota.source() == iota.target()))
    throw std::invalid_argument("iota_order: iota must be an endomorphism");
  IotaOrderReport rep;
  LinearMap id = LinearMap::identity(iota.source());
  LinearMap power = id;
  for (int n = 1; n <= max_power; ++n) {
    power = compose(iota, power);
    if (projectively_homotopic(power, id)) {
      if (rep.minimal_order == 0) rep.minimal_order = n;
      if (n <= 4) rep.order_at_most_4 = true;
      break;
    }
  }
  if (rep.minimal_order == 0 && max_power >= 4) {
    LinearMap p4 = compose(iota, compose(iota, compose(iota, iota)));
    rep.order_at_most_4 = projectively_homotopic(p4, id);
  }
  return rep;
}

namespace {

// Relabels components by iota-orbit (sorted labels joined with '|') so the
// cone differential stays component-consistent when conjugation permutes
// Spin^c classes.
std::pair<GradedComplex, LinearMap> orbit_relabel(const GradedComplex& c, const LinearMap& iota) {
  std::map<std::string, std::string> parent;
  std::set<std::string> labels;
  for (const auto& g : c.generators()) labels.insert(g.component);
  for (const auto& l : labels) parent[l] = l;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    return parent.at(x) == x ? x : parent.at(x) = find(parent.at(x));
  };
  bool mixes = false;
  for (const auto& [idx, p] : iota.entries()) {
    std::string a = find(c.gen(idx.second).component);
    std::string b = find(iota.target().gen(idx.first).component);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      mixes = true;
    }
  }
  if (!mixes) return {c, iota};

  std::map<std::string, std::vector<std::string>> orbits;
  for (const auto& l : labels) orbits[find(l)].push_back(l);
  std::map<std::string, std::string> relabel;
  for (auto& [root, members] : orbits) {
    std::sort(members.begin(), members.end());
    std::string joined;
    for (const auto& m : members) joined += (joined.empty() ? "" : "|") + m;
    for (const auto& m : members) relabel[m] = joined;
  }
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) g.component = relabel.at(g.component);
  GradedComplex rc(gens);
  for (const auto& [idx, p] : c.entries()) rc.set_entry(idx.first, idx.second, p);
  LinearMap ri(rc, rc, 0);
  for (const auto& [idx, p] : iota.entries()) ri.set_entry(idx.first, idx.second, p);
  return {rc, ri};
}

}  // namespace

ConePair build_cone_pair(const GradedComplex& c, const LinearMap& iota) {
  if (!(iota.source() == c) || !(iota.target() == c))
    throw std::invalid_argument("build_cone_pair: iota must be an endomorphism of c");
  auto [rc, riota] = orbit_relabel(c, iota);
  LinearMap id = LinearMap::identity(rc);
  ConePair out{mapping_cone(id + riota), mapping_cone(id - riota)};
  return out;
}

ConePair build_cfi_pair(const IotaData& data) {
  return build_cone_pair(data.iota.source(), data.iota);
}

ConePairInvariant cone_pair_invariant(const ConePair& p, int truncation) {
  return {invariant_tuple(p.plus, truncation), invariant_tuple(p.minus, truncation)};
}

bool compare_cone_pairs(const ConePair& a, const ConePair& b, int truncation) {
  ConePairInvariant ia = cone_pair_invariant(a, truncation);
  ConePairInvariant ib = cone_pair_invariant(b, truncation);
  auto order = [](ConePairInvariant& x) {
    if (!(x.plus < x.minus) && !(x.plus == x.minus)) std::swap(x.plus, x.minus);
  };
  order(ia);
  order(ib);
  return ia.plus == ib.plus && ia.minus == ib.minus;
}

}  // namespace floer
