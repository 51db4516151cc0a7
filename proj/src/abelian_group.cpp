#include "vcyc/abelian_group.hpp"

#include <sstream>

#include "vcyc/normal_form.hpp"

namespace vcyc {

AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t free_rank,
                                              const std::vector<Integer>& orders) {
  AbelianGroup g;
  g.free_rank_ = free_rank;
  std::vector<Integer> finite;
  for (const auto& d : orders) {
    if (d == 0)
      ++g.free_rank_;
    else if (abs(d) != 1)
      finite.push_back(abs(d));
  }
  if (finite.empty()) return g;
  linalg::IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  for (const auto& d : linalg::smith_invariants(diag))
    if (d != 1) g.torsion_.push_back(d);
  return g;
}

AbelianGroup AbelianGroup::cyclic(const Integer& order) { return from_cyclic_orders(0, {order}); }

AbelianGroup AbelianGroup::cokernel(const linalg::IntMatrix& m) {
  const auto inv = linalg::smith_invariants(m);
  return from_cyclic_orders(m.rows() - inv.size(), inv);
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
  std::vector<Integer> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return from_cyclic_orders(free_rank_ + other.free_rank_, orders);
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

}  // namespace vcyc
