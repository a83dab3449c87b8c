#include <doctest.h>

#include "table.hpp"

TEST_CASE("table has two columns") {
  netkit::TableWriter w({"id", "name"});
  CHECK(w.column_count() == 2);
}

TEST_CASE("table row joins cells") {
  netkit::TableWriter w({"id", "name"});
  CHECK(w.row({"1", "apple"}) == "1,apple");
}

TEST_CASE("table render writes rows") {
  netkit::TableWriter w({"id", "name"});
  const std::string out = w.render({{"1", "apple"}, {"2", "pear"}});
  CHECK(out.find("1,apple\n") != std::string::npos);
  CHECK(out.find("2,pear\n") != std::string::npos);
}
