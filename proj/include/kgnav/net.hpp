#pragma once

// Small HTTP plumbing shared by the SPARQL gateway, the remote linker and
// embedder clients, the query service and the fixture stubs.

#include <chrono>
#include <memory>
#include <string>
#include <thread>

#include <httplib.h>

#include "kgnav/errors.hpp"

namespace kgnav {

struct ParsedUrl {
    std::string scheme;
    std::string host;
    int port = 80;
    std::string path = "/";
};

inline ParsedUrl parse_url(const std::string& url) {
    ParsedUrl out;
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw ConfigError("URL missing scheme: " + url);
    out.scheme = url.substr(0, scheme_end);
    if (out.scheme != "http")
        throw ConfigError("unsupported URL scheme '" + out.scheme + "' in " + url);
    std::size_t host_start = scheme_end + 3;
    auto path_start = url.find('/', host_start);
    std::string authority = path_start == std::string::npos
                                ? url.substr(host_start)
                                : url.substr(host_start, path_start - host_start);
    if (path_start != std::string::npos) out.path = url.substr(path_start);
    const auto colon = authority.find(':');
    if (colon == std::string::npos) {
        out.host = authority;
    } else {
        out.host = authority.substr(0, colon);
        try {
            out.port = std::stoi(authority.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("bad port in URL: " + url);
        }
    }
    if (out.host.empty()) throw ConfigError("URL missing host: " + url);
    return out;
}

inline void set_timeouts(httplib::Client& client, int timeout_ms) {
    const time_t sec = timeout_ms / 1000;
    const time_t usec = (timeout_ms % 1000) * 1000;
    client.set_connection_timeout(sec, usec);
    client.set_read_timeout(sec, usec);
    client.set_write_timeout(sec, usec);
}

// One POST, no retries. Throws TransportError when the endpoint cannot be
// reached and ProtocolError on a non-2xx status; returns the body otherwise.
inline std::string http_post(const std::string& url, const std::string& body,
                             const std::string& content_type, int timeout_ms) {
    const ParsedUrl u = parse_url(url);
    httplib::Client client(u.host, u.port);
    set_timeouts(client, timeout_ms);
    auto res = client.Post(u.path, body, content_type);
    if (!res)
        throw TransportError("POST " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300)
        throw ProtocolError(res->status, "POST " + url);
    return res->body;
}

// Runs an httplib server on a background thread, bound to an ephemeral
// 127.0.0.1 port unless one is given. Stops and joins on destruction.
class ScopedServer {
public:
    explicit ScopedServer(std::shared_ptr<httplib::Server> server, int port = 0)
        : server_(std::move(server)) {
        if (port == 0) {
            port_ = server_->bind_to_any_port("127.0.0.1");
            if (port_ < 0) throw TransportError("could not bind stub server");
        } else {
            if (!server_->bind_to_port("127.0.0.1", port))
                throw TransportError("could not bind port " + std::to_string(port));
            port_ = port;
        }
        thread_ = std::thread([srv = server_] { srv->listen_after_bind(); });
        server_->wait_until_ready();
    }

    ScopedServer(const ScopedServer&) = delete;
    ScopedServer& operator=(const ScopedServer&) = delete;

    ~ScopedServer() {
        server_->stop();
        if (thread_.joinable()) thread_.join();
    }

    int port() const noexcept { return port_; }
    std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }

private:
    std::shared_ptr<httplib::Server> server_;
    std::thread thread_;
    int port_ = 0;
};

} // namespace kgnav
