#include "gibbs/jsonio.hpp"

#include <cmath>
#include <cstdio>

namespace gibbs {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void JsonWriter::comma() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!needs_comma_.empty()) {
    if (needs_comma_.back()) out_ << ",";
    needs_comma_.back() = true;
  }
}

void JsonWriter::begin_object() {
  comma();
  out_ << "{";
  needs_comma_.push_back(false);
}

void JsonWriter::end_object() {
  needs_comma_.pop_back();
  out_ << "}";
}

void JsonWriter::begin_array() {
  comma();
  out_ << "[";
  needs_comma_.push_back(false);
}

void JsonWriter::end_array() {
  needs_comma_.pop_back();
  out_ << "]";
}

void JsonWriter::key(std::string_view name) {
  comma();
  out_ << '"';
  for (char c : name) {
    if (c == '"' || c == '\\') out_ << '\\';
    out_ << c;
  }
  out_ << "\":";
  pending_key_ = true;
}

void JsonWriter::value(double v) {
  comma();
  if (!std::isfinite(v)) {
    out_ << "null";
    return;
  }
  out_ << format_double(v);
}

void JsonWriter::value(std::int64_t v) {
  comma();
  out_ << v;
}

void JsonWriter::value(std::uint64_t v) {
  comma();
  out_ << v;
}

void JsonWriter::value(bool v) {
  comma();
  out_ << (v ? "true" : "false");
}

void JsonWriter::value(std::string_view v) {
  comma();
  out_ << '"';
  for (char c : v) {
    switch (c) {
      case '"': out_ << "\\\""; break;
      case '\\': out_ << "\\\\"; break;
      case '\n': out_ << "\\n"; break;
      case '\r': out_ << "\\r"; break;
      case '\t': out_ << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out_ << buf;
        } else {
          out_ << c;
        }
    }
  }
  out_ << '"';
}

void JsonWriter::value_null() {
  comma();
  out_ << "null";
}

void JsonWriter::value_raw(std::string_view json) {
  comma();
  out_ << json;
}

void JsonWriter::array_of(std::string_view name, std::span<const double> values) {
  key(name);
  begin_array();
  for (double v : values) value(v);
  end_array();
}

}  // namespace gibbs
