#pragma once

#include <stdexcept>
#include <string>

namespace plumb {

enum class Errc {
  disconnected_graph,
  loop_edge,
  dangling_edge,
  duplicate_vertex_id,
  invalid_params,
  not_a_lens_graph,
  not_negative_definite,
  not_taut_class,
  reducedness_violated,
  no_such_site,
  not_blow_downable,
  last_vertex,
  not_minimal,
  malformed_string,
  no_l_nodes,
  all_twos,
  unrepresentable,
  bad_format,
  internal_check,
};

const char* errc_name(Errc c);

/// Domain error carrying a stable code; what() is "<CodeName>: <detail>".
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace plumb
