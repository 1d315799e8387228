#include "trigroup/configuration.hpp"

#include <algorithm>

namespace trigroup {

void Configuration::add_point(const std::string& label, const HomPoint& p) {
  points_.emplace_back(label, p);
}

void Configuration::add_line(const std::string& label, const HomLine& l) {
  lines_.emplace_back(label, l);
}

bool Configuration::remove_line(const std::string& label) {
  const auto it = std::find_if(lines_.begin(), lines_.end(),
                               [&](const auto& e) { return e.first == label; });
  if (it == lines_.end()) return false;
  lines_.erase(it);
  return true;
}

std::set<std::pair<std::string, std::string>> Configuration::incidences() const {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [pl, p] : points_)
    for (const auto& [ll, l] : lines_)
      if (incident(p, l)) out.emplace(pl, ll);
  return out;
}

int Configuration::point_degree(const std::string& label) const {
  int d = 0;
  for (const auto& [pl, p] : points_) {
    if (pl != label) continue;
    for (const auto& [ll, l] : lines_)
      if (incident(p, l)) ++d;
  }
  return d;
}

int Configuration::line_degree(const std::string& label) const {
  int d = 0;
  for (const auto& [ll, l] : lines_) {
    if (ll != label) continue;
    for (const auto& [pl, p] : points_)
      if (incident(p, l)) ++d;
  }
  return d;
}

}  // namespace trigroup
