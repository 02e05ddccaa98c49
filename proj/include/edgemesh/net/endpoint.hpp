#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <string>

namespace edgemesh::net {

// A network endpoint as "host:port". Hosts may be IPv4 literals or opaque
// names (simulated addresses use names like "10.0.0.3" too, they are just
// keys in the router table).
struct Endpoint {
    std::string host;
    std::uint16_t port = 0;

    std::string str() const;
    bool empty() const { return host.empty() && port == 0; }

    bool operator==(const Endpoint&) const = default;
    // Ascending-address order: numeric by octet for IPv4 literals,
    // lexicographic otherwise, then by port.
    std::strong_ordering operator<=>(const Endpoint& other) const;
};

std::optional<Endpoint> parse_endpoint(const std::string& text);

// "host:port/some/path" -> endpoint + path ("/" default).
struct EndpointPath {
    Endpoint endpoint;
    std::string path;
};
std::optional<EndpointPath> parse_endpoint_path(const std::string& text);

// Numeric value of an IPv4 dotted quad, if the host is one.
std::optional<std::uint32_t> ipv4_value(const std::string& host);

}  // namespace edgemesh::net
