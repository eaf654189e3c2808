// Minimal deterministic JSON document builder: object keys are kept sorted
// (std::map) and numbers are printed with a fixed %.17g format, so identical
// inputs serialize to byte-identical reports.
#pragma once

#include <cstdio>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace lamspec {

class JsonValue {
 public:
  using Array = std::vector<JsonValue>;
  using Object = std::map<std::string, JsonValue>;

  JsonValue() : data_(nullptr) {}
  JsonValue(std::nullptr_t) : data_(nullptr) {}
  JsonValue(bool b) : data_(b) {}
  JsonValue(double v) : data_(v) {}
  JsonValue(int v) : data_(static_cast<double>(v)) {}
  JsonValue(long v) : data_(static_cast<double>(v)) {}
  JsonValue(std::size_t v) : data_(static_cast<double>(v)) {}
  JsonValue(const char* s) : data_(std::string(s)) {}
  JsonValue(std::string s) : data_(std::move(s)) {}
  JsonValue(Array a) : data_(std::move(a)) {}
  JsonValue(Object o) : data_(std::move(o)) {}

  static JsonValue array(std::vector<double> v) {
    Array a;
    a.reserve(v.size());
    for (double x : v) a.emplace_back(x);
    return JsonValue(std::move(a));
  }

  std::string dump() const {
    std::string out;
    write(out);
    return out;
  }

 private:
  std::variant<std::nullptr_t, bool, double, std::string, Array, Object> data_;

  static void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out) const {
    if (std::holds_alternative<std::nullptr_t>(data_)) {
      out += "null";
    } else if (std::holds_alternative<bool>(data_)) {
      out += std::get<bool>(data_) ? "true" : "false";
    } else if (std::holds_alternative<double>(data_)) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(data_));
      out += buf;
    } else if (std::holds_alternative<std::string>(data_)) {
      write_escaped(out, std::get<std::string>(data_));
    } else if (std::holds_alternative<Array>(data_)) {
      out += '[';
      const auto& a = std::get<Array>(data_);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        a[i].write(out);
      }
      out += ']';
    } else {
      out += '{';
      const auto& o = std::get<Object>(data_);
      bool first = true;
      for (const auto& [k, v] : o) {
        if (!first) out += ',';
        first = false;
        write_escaped(out, k);
        out += ':';
        v.write(out);
      }
      out += '}';
    }
  }
};

}  // namespace lamspec
