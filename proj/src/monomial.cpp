#include "rhomboid/monomial.hpp"

#include <algorithm>
#include <iterator>

namespace rhomboid {

monomial::monomial(std::vector<edge_label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
}

monomial operator*(const monomial& x, const monomial& y) {
  monomial out;
  out.labels_.reserve(x.degree() + y.degree());
  std::merge(x.labels_.begin(), x.labels_.end(), y.labels_.begin(),
             y.labels_.end(), std::back_inserter(out.labels_));
  return out;
}

std::string monomial::to_string() const {
  if (labels_.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i != 0)
      out += '*';
    out += labels_[i].to_string();
  }
  return out;
}

} // namespace rhomboid
