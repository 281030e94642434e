#pragma once

// JSON system documents:
//
//   {
//     "n": 3, "k1": 2, "k2": 3,
//     "start_state": 2,                       // optional, default 0
//     "components": [ M1, M2, M3 ]            // exactly one of these three
//     "homogeneous": M
//     "segments": [ {"from": 1, "to": 5, "matrix": M}, ... ]
//   }
//
// where each M is [[p00, p01, p02], [p10, p11, p12], [p20, p21, p22]].
// Structural problems throw Error(MalformedDocument); semantic ones keep
// the core error code with the field named in the message.

#include <filesystem>
#include <string_view>

#include "kofn/model.hpp"

namespace kofn::cli {

struct SpecDocument {
  ComponentChain chain;
  SystemSpec spec;
};

SpecDocument parse_document(std::string_view json_text);
SpecDocument load_document(const std::filesystem::path& path);

}  // namespace kofn::cli
