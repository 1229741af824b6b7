#ifndef RCASPACE_TOOLS_DEMO_DATA_HPP
#define RCASPACE_TOOLS_DEMO_DATA_HPP

#include <string>
#include <vector>

#include "rcaspace/index_kind.hpp"

namespace rcaspace::tools {

struct DemoFile {
  std::string name;     // file name inside the demo directory
  std::string content;
};

/// Synthetic 24-country x 27-field dataset (documents, citations, h_index)
/// plus its manifest. Generated from closed-form integer formulas, so the
/// bytes never change between builds.
std::vector<DemoFile> demo_dataset();

} // namespace rcaspace::tools

#endif
