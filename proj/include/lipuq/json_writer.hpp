#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "lipuq/space.hpp"

namespace lipuq {

// 17 significant digits: enough to round-trip any double exactly.
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Minimal deterministic JSON writer: insertion order is emission order and
// every number goes through fmt17. Report files must be byte-identical for a
// given config, which rules out library dump() number formatting.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }
  const std::string& str() const { return out_; }

  JsonWriter& begin_object() {
    sep();
    out_ += '{';
    first_.push_back(true);
    return *this;
  }
  JsonWriter& end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
  }
  JsonWriter& begin_array() {
    sep();
    out_ += '[';
    first_.push_back(true);
    return *this;
  }
  JsonWriter& end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
  }

  JsonWriter& key(const std::string& k) {
    sep();
    append_string(k);
    out_ += ':';
    pending_value_ = true;  // the following value must not emit a comma
    return *this;
  }

  JsonWriter& value(double x) {
    sep();
    out_ += fmt17(x);
    return *this;
  }
  JsonWriter& value(int x) { return value_raw(std::to_string(x)); }
  JsonWriter& value(long long x) { return value_raw(std::to_string(x)); }
  JsonWriter& value(unsigned long long x) { return value_raw(std::to_string(x)); }
  JsonWriter& value(bool b) { return value_raw(b ? "true" : "false"); }
  JsonWriter& value(const std::string& s) {
    sep();
    append_string(s);
    return *this;
  }
  JsonWriter& value(const char* s) { return value(std::string(s)); }
  JsonWriter& value(Complex z) {
    begin_array();
    value(z.real());
    value(z.imag());
    end_array();
    return *this;
  }
  JsonWriter& value(const Vector& v) {
    begin_array();
    for (const Complex& z : v) value(z);
    end_array();
    return *this;
  }

  JsonWriter& value_raw(const std::string& raw) {
    sep();
    out_ += raw;
    return *this;
  }

 private:
  void sep() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) out_ += ',';
      first_.back() = false;
    }
  }

  void append_string(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> first_;
  bool pending_value_ = false;
};

}  // namespace lipuq
