#pragma once

#include <string>
#include <vector>

namespace netkit {

class Connection {
 public:
  void open(const std::string& host);
  void close();
  int session_count() const;

 private:
  std::vector<std::string> sessions_;
};

}  // namespace netkit
