#include "hytet/json_writer.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hytet::out {

Node& Node::set(std::string key, Node value) {
    auto* obj = std::get_if<Object>(&v_);
    if (obj == nullptr) throw std::logic_error("set on a non-object node");
    obj->emplace_back(std::move(key), std::move(value));
    return obj->back().second;
}

Node& Node::push(Node value) {
    auto* arr = std::get_if<Array>(&v_);
    if (arr == nullptr) throw std::logic_error("push on a non-array node");
    arr->push_back(std::move(value));
    return arr->back();
}

const Node* Node::find(const std::string& key) const {
    const auto* obj = std::get_if<Object>(&v_);
    if (obj == nullptr) return nullptr;
    for (const auto& [k, v] : *obj)
        if (k == key) return &v;
    return nullptr;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

void escape(std::string& out, const std::string& s) {
    out += '"';
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

std::string scalar(const Node::Value& v, bool json) {
    if (std::holds_alternative<std::monostate>(v)) return json ? "null" : "";
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const auto* d = std::get_if<double>(&v)) {
        if (json && !std::isfinite(*d)) return "null";
        return format_number(*d);
    }
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* u = std::get_if<std::uint64_t>(&v)) return std::to_string(*u);
    return {};
}

void write_json(std::string& out, const Node& node, int indent) {
    const auto& v = node.value();
    const std::string pad(2 * (indent + 1), ' ');
    const std::string close(2 * indent, ' ');
    if (const auto* s = std::get_if<std::string>(&v)) {
        escape(out, *s);
    } else if (const auto* arr = std::get_if<Node::Array>(&v)) {
        if (arr->empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < arr->size(); ++i) {
            out += pad;
            write_json(out, (*arr)[i], indent + 1);
            out += i + 1 < arr->size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else if (const auto* obj = std::get_if<Node::Object>(&v)) {
        if (obj->empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        for (std::size_t i = 0; i < obj->size(); ++i) {
            out += pad;
            escape(out, (*obj)[i].first);
            out += ": ";
            write_json(out, (*obj)[i].second, indent + 1);
            out += i + 1 < obj->size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else {
        out += scalar(v, true);
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (const char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

void write_csv(std::string& out, const Node& node, const std::string& path) {
    const auto& v = node.value();
    auto join = [&](const std::string& seg) { return path.empty() ? seg : path + "." + seg; };
    if (const auto* arr = std::get_if<Node::Array>(&v)) {
        for (std::size_t i = 0; i < arr->size(); ++i)
            write_csv(out, (*arr)[i], join(std::to_string(i)));
    } else if (const auto* obj = std::get_if<Node::Object>(&v)) {
        for (const auto& [k, child] : *obj) write_csv(out, child, join(k));
    } else if (const auto* s = std::get_if<std::string>(&v)) {
        out += csv_field(path) + "," + csv_field(*s) + "\n";
    } else {
        out += csv_field(path) + "," + scalar(v, false) + "\n";
    }
}

}  // namespace

std::string to_json(const Node& node) {
    std::string out;
    write_json(out, node, 0);
    out += '\n';
    return out;
}

std::string to_csv(const Node& node) {
    std::string out = "field,value\n";
    write_csv(out, node, "");
    return out;
}

}  // namespace hytet::out
