#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gibbs {

// Streaming JSON emitter with insertion-ordered keys and doubles rendered
// with 17 significant digits, so identical values serialize to identical
// bytes. Non-finite doubles become null.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(std::string_view name);

  void value(double v);
  void value(std::int64_t v);
  void value(std::uint64_t v);
  void value(int v) { value(static_cast<std::int64_t>(v)); }
  void value(bool v);
  void value(std::string_view v);
  void value_null();
  // pre-serialized JSON (e.g. a circuit dump) inserted verbatim
  void value_raw(std::string_view json);

  void key_value(std::string_view name, double v) { key(name); value(v); }
  void key_value(std::string_view name, std::int64_t v) { key(name); value(v); }
  void key_value(std::string_view name, std::uint64_t v) { key(name); value(v); }
  void key_value(std::string_view name, int v) { key(name); value(v); }
  void key_value(std::string_view name, bool v) { key(name); value(v); }
  void key_value(std::string_view name, std::string_view v) { key(name); value(v); }

  void array_of(std::string_view name, std::span<const double> values);

 private:
  void comma();
  std::ostream& out_;
  std::vector<bool> needs_comma_;
  bool pending_key_ = false;
};

std::string format_double(double v);  // %.17g

}  // namespace gibbs
