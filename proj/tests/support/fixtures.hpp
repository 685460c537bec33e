#pragma once

// Golden fixtures shared by the layout tests and the acceptance suite.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "afscope/explain.hpp"
#include "afscope/formats.hpp"
#include "afscope/views.hpp"

namespace fixtures {

struct Fixture {
  std::string name;
  std::string apx;
};

inline std::vector<Fixture> all() {
  return {
      {"chain", "arg(a). arg(b). arg(c). att(a,b). att(b,c)."},
      {"mutual", "arg(m). arg(o). att(m,o). att(o,m)."},
      {"cycle3", "arg(a). arg(b). arg(c). att(a,b). att(b,c). att(c,a)."},
      {"cycle4", "arg(a). arg(b). arg(c). arg(d). att(a,b). att(b,c). att(c,d). att(d,a)."},
      {"f4",
       "arg(v). arg(b). arg(c). arg(d). arg(f). "
       "att(v,b). att(b,c). att(c,d). att(d,f). att(f,b)."},
  };
}

struct Rendered {
  std::string dot;
  std::string layout_json;
};

inline Rendered render(const afscope::Framework& fw, const afscope::View& view) {
  return {view.dot(fw), view.layout_json(fw)};
}

/// Base view: grounded labelling with its own edge classes.
inline Rendered render_base(const afscope::Framework& fw) {
  return render(fw, afscope::base_view(fw));
}

/// Overlay of stable solution `solution` with its critical set `delta`
/// drawn as suspended edges.
inline Rendered render_overlay(const afscope::Framework& fw, std::size_t solution,
                               std::size_t delta) {
  return render(fw, afscope::solution_view(fw, afscope::explain(fw, solution), delta));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Compares `actual` with the golden file; AFSCOPE_UPDATE_GOLDENS=1
/// rewrites it instead.
inline bool matches_golden(const std::string& dir, const std::string& file,
                           const std::string& actual) {
  const std::string path = dir + "/" + file;
  if (const char* update = std::getenv("AFSCOPE_UPDATE_GOLDENS"); update && *update == '1') {
    std::ofstream(path, std::ios::binary) << actual;
    return true;
  }
  return read_file(path) == actual;
}

}  // namespace fixtures
