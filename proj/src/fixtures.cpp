#include "seqdens/fixtures.hpp"

#include "seqdens/io.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace seqdens::fixtures {

namespace {

struct Fixture {
  const char* name;
  const char* text;
};

constexpr std::array<Fixture, 7> kFixtures{{
    {"example4",
     "# three intervals, two of them fat\n"
     "period 1\n"
     "0 1/12\n"
     "1/3 0\n"
     "1/2 1/12\n"},
    {"s15",
     "period 15\n"
     "0 0\n1 0\n3 0\n4 0\n5 0\n7 0\n9 0\n10 0\n12 0\n"},
    {"q15",
     "period 15\n"
     "0 0\n1 0\n3 0\n4 0\n6 0\n8 0\n9 0\n12 0\n14 0\n"},
    {"multimax2",
     "# second density has two local maxima\n"
     "period 1\n"
     "0 0\n1/8 0\n1/4 0\n3/4 0\n"},
    {"multimax3",
     "# second density has three local maxima\n"
     "period 1\n"
     "0 0\n1/81 0\n1/27 0\n1/9 0\n1/3 0\n"},
    {"multimax5",
     "# third density has five local maxima\n"
     "period 1\n"
     "0 0\n1/64 0\n1/16 0\n1/8 0\n1/4 0\n3/4 0\n"},
    {"smi",
     "# family member m=5, i=1: gap word 2,1,2,1,1\n"
     "period 7\n"
     "0 0\n2 0\n3 0\n5 0\n6 0\n"},
}};

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> list = [] {
    std::vector<std::string> out;
    for (const auto& f : kFixtures) out.emplace_back(f.name);
    return out;
  }();
  return list;
}

std::string file_text(const std::string& name) {
  for (const auto& f : kFixtures) {
    if (name == f.name) {
      return f.text;
    }
  }
  throw std::out_of_range("unknown fixture: " + name);
}

PeriodicSequence get(const std::string& name) {
  std::istringstream in(file_text(name));
  return read_sequence(in);
}

}  // namespace seqdens::fixtures
