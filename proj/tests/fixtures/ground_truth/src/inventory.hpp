#pragma once

#include <map>
#include <string>

#include "logger.hpp"

namespace netkit {

class Inventory {
 public:
  explicit Inventory(Logger& log) : log_(log) {}

  void add(const std::string& item, int quantity);
  int count(const std::string& item) const;
  bool contains(const std::string& item) const;
  double average_quantity() const;
  const std::string* find_first() const;
  char category_code(const std::string& item) const;

 private:
  Logger& log_;
  std::map<std::string, int> items_;
};

}  // namespace netkit
