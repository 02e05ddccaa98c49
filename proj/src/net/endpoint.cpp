#include "edgemesh/net/endpoint.hpp"

#include <charconv>

namespace edgemesh::net {

std::string Endpoint::str() const {
    return host + ":" + std::to_string(port);
}

std::optional<std::uint32_t> ipv4_value(const std::string& host) {
    std::uint32_t value = 0;
    int octets = 0;
    const char* p = host.data();
    const char* end = p + host.size();
    while (p < end) {
        unsigned int octet = 0;
        auto [next, ec] = std::from_chars(p, end, octet);
        if (ec != std::errc() || octet > 255) return std::nullopt;
        value = (value << 8) | octet;
        ++octets;
        p = next;
        if (p == end) break;
        if (*p != '.' || octets == 4) return std::nullopt;
        ++p;
    }
    if (octets != 4) return std::nullopt;
    return value;
}

std::strong_ordering Endpoint::operator<=>(const Endpoint& other) const {
    auto a = ipv4_value(host);
    auto b = ipv4_value(other.host);
    if (a && b) {
        if (*a != *b) return *a <=> *b;
    } else if (a && !b) {
        return std::strong_ordering::less;  // numeric addresses sort first
    } else if (!a && b) {
        return std::strong_ordering::greater;
    } else if (host != other.host) {
        return host <=> other.host;
    }
    return port <=> other.port;
}

std::optional<Endpoint> parse_endpoint(const std::string& text) {
    auto colon = text.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        return std::nullopt;
    unsigned int port = 0;
    auto [next, ec] =
        std::from_chars(text.data() + colon + 1, text.data() + text.size(), port);
    if (ec != std::errc() || next != text.data() + text.size() || port > 65535)
        return std::nullopt;
    return Endpoint{text.substr(0, colon), static_cast<std::uint16_t>(port)};
}

std::optional<EndpointPath> parse_endpoint_path(const std::string& text) {
    auto slash = text.find('/');
    std::string addr = slash == std::string::npos ? text : text.substr(0, slash);
    std::string path = slash == std::string::npos ? "/" : text.substr(slash);
    auto ep = parse_endpoint(addr);
    if (!ep) return std::nullopt;
    return EndpointPath{*ep, path};
}

}  // namespace edgemesh::net
