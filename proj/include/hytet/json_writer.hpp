#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hytet::out {

/// Ordered document tree for CLI output. Objects keep insertion order so
/// serialisation is byte-stable.
class Node {
public:
    using Array = std::vector<Node>;
    using Object = std::vector<std::pair<std::string, Node>>;

    Node() = default;
    Node(std::nullptr_t) {}
    Node(bool v) : v_(v) {}
    Node(double v) : v_(v) {}
    Node(int v) : v_(static_cast<std::int64_t>(v)) {}
    Node(std::int64_t v) : v_(v) {}
    Node(std::uint64_t v) : v_(v) {}
    Node(const char* v) : v_(std::string(v)) {}
    Node(std::string v) : v_(std::move(v)) {}
    Node(Array v) : v_(std::move(v)) {}

    static Node object() {
        Node n;
        n.v_ = Object{};
        return n;
    }
    static Node array() {
        Node n;
        n.v_ = Array{};
        return n;
    }

    /// Appends a member; the node must be an object. The returned reference
    /// is invalidated by the next set on this node.
    Node& set(std::string key, Node value);
    /// Appends an element; the node must be an array.
    Node& push(Node value);
    /// Member lookup, nullptr if absent or not an object.
    const Node* find(const std::string& key) const;

    using Value = std::variant<std::monostate, bool, double, std::int64_t, std::uint64_t,
                               std::string, Array, Object>;
    const Value& value() const { return v_; }

private:
    Value v_;
};

/// Shortest form is not used: always 17 significant digits, no locale.
std::string format_number(double v);

/// JSON with two-space indentation; non-finite numbers become null.
std::string to_json(const Node& node);

/// Flattened "path,value" rows (path segments joined by '.', array
/// indices as numbers) under a "field,value" header.
std::string to_csv(const Node& node);

}  // namespace hytet::out
