#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trigroup/projective.hpp"

namespace trigroup {

/// Labeled points and lines with their exact incidence relation. Incidences
/// are recomputed from coordinates, so every recorded pair holds exactly by
/// construction.
class Configuration {
 public:
  void add_point(const std::string& label, const HomPoint& p);
  void add_line(const std::string& label, const HomLine& l);
  bool remove_line(const std::string& label);

  const std::vector<std::pair<std::string, HomPoint>>& points() const { return points_; }
  const std::vector<std::pair<std::string, HomLine>>& lines() const { return lines_; }

  /// All exact (point-label, line-label) incidences.
  std::set<std::pair<std::string, std::string>> incidences() const;

  int point_degree(const std::string& label) const;
  int line_degree(const std::string& label) const;

 private:
  std::vector<std::pair<std::string, HomPoint>> points_;
  std::vector<std::pair<std::string, HomLine>> lines_;
};

}  // namespace trigroup
