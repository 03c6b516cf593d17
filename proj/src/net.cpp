// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#include "vertexlearn/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>

namespace vertexlearn {

namespace {

[[noreturn]] void throw_errno(const std::string& what) {
    throw NetworkError(what + ": " + std::strerror(errno));
}

sockaddr_in resolve(const std::string& host, int port) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(static_cast<std::uint16_t>(port));
    if (host.empty() || host == "*") {
        addr.sin_addr.s_addr = htonl(INADDR_ANY);
        return addr;
    }
    if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) == 1) return addr;
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* result = nullptr;
    if (getaddrinfo(host.c_str(), nullptr, &hints, &result) != 0 || result == nullptr)
        throw NetworkError("cannot resolve host: " + host);
    addr.sin_addr = reinterpret_cast<sockaddr_in*>(result->ai_addr)->sin_addr;
    freeaddrinfo(result);
    return addr;
}

}  // namespace

TcpConn::TcpConn(TcpConn&& o) noexcept : fd_(o.fd_), buffer_(std::move(o.buffer_)) { o.fd_ = -1; }

TcpConn& TcpConn::operator=(TcpConn&& o) noexcept {
    if (this != &o) {
        close();
        fd_ = o.fd_;
        buffer_ = std::move(o.buffer_);
        o.fd_ = -1;
    }
    return *this;
}

TcpConn::~TcpConn() { close(); }

TcpConn TcpConn::connect(const std::string& host, int port) {
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw_errno("socket");
    sockaddr_in addr = resolve(host, port);
    if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        int saved = errno;
        ::close(fd);
        errno = saved;
        throw_errno("connect to " + host + ":" + std::to_string(port));
    }
    int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    return TcpConn(fd);
}

bool TcpConn::read_line(std::string& line) {
    if (fd_ < 0) throw NetworkError("read on closed connection");
    while (true) {
        auto nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            line.assign(buffer_, 0, nl);
            buffer_.erase(0, nl + 1);
            return true;
        }
        char chunk[4096];
        ssize_t got = ::recv(fd_, chunk, sizeof(chunk), 0);
        if (got < 0) {
            if (errno == EINTR) continue;
            throw_errno("recv");
        }
        if (got == 0) {
            if (!buffer_.empty()) throw NetworkError("connection closed mid-line");
            return false;
        }
        buffer_.append(chunk, static_cast<std::size_t>(got));
    }
}

void TcpConn::write_line(const std::string& line) {
    if (fd_ < 0) throw NetworkError("write on closed connection");
    std::string framed = line + "\n";
    std::size_t sent = 0;
    while (sent < framed.size()) {
        ssize_t put = ::send(fd_, framed.data() + sent, framed.size() - sent, MSG_NOSIGNAL);
        if (put < 0) {
            if (errno == EINTR) continue;
            throw_errno("send");
        }
        sent += static_cast<std::size_t>(put);
    }
}

void TcpConn::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

TcpListener TcpListener::bind(const std::string& host, int port) {
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw_errno("socket");
    int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr = resolve(host, port);
    if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        int saved = errno;
        ::close(fd);
        errno = saved;
        throw_errno("bind " + host + ":" + std::to_string(port));
    }
    if (::listen(fd, 16) != 0) {
        int saved = errno;
        ::close(fd);
        errno = saved;
        throw_errno("listen");
    }
    sockaddr_in actual{};
    socklen_t len = sizeof(actual);
    if (::getsockname(fd, reinterpret_cast<sockaddr*>(&actual), &len) != 0) {
        int saved = errno;
        ::close(fd);
        errno = saved;
        throw_errno("getsockname");
    }
    return TcpListener(fd, ntohs(actual.sin_port));
}

TcpListener::TcpListener(TcpListener&& o) noexcept : fd_(o.fd_), port_(o.port_) { o.fd_ = -1; }

TcpListener::~TcpListener() { close(); }

TcpConn TcpListener::accept() {
    if (fd_ < 0) throw NetworkError("accept on closed listener");
    while (true) {
        int conn = ::accept(fd_, nullptr, nullptr);
        if (conn >= 0) {
            int one = 1;
            ::setsockopt(conn, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
            return TcpConn(conn);
        }
        if (errno == EINTR) continue;
        throw_errno("accept");
    }
}

void TcpListener::close() {
    if (fd_ >= 0) {
        ::shutdown(fd_, SHUT_RDWR);
        ::close(fd_);
        fd_ = -1;
    }
}

TeacherServer::TeacherServer(const std::string& host, int port, Graph secret, Concept target_concept, TeacherPolicy policy,
                             TeacherMode mode, TeacherLimits limits)
    : listener_(TcpListener::bind(host, port)),
      secret_(std::move(secret)),
      concept_(target_concept),
      policy_(policy),
      mode_(mode),
      limits_(limits) {}

TeacherServer::~TeacherServer() { stop(); }

void TeacherServer::serve() {
    while (!stopping_) {
        TcpConn conn(-1);
        try {
            conn = listener_.accept();
        } catch (const NetworkError&) {
            if (stopping_) return;
            throw;
        }
        std::lock_guard<std::mutex> lock(workers_mutex_);
        workers_.emplace_back(
            [this](TcpConn c) { handle_connection(std::move(c)); },
            std::move(conn));
    }
}

void TeacherServer::start() {
    accept_thread_ = std::thread([this] {
        try {
            serve();
        } catch (const NetworkError&) {
            // listener closed under us; nothing to do
        }
    });
}

void TeacherServer::stop() {
    if (stopping_.exchange(true)) {
        if (accept_thread_.joinable()) accept_thread_.join();
        return;
    }
    listener_.close();
    if (accept_thread_.joinable()) accept_thread_.join();
    std::lock_guard<std::mutex> lock(workers_mutex_);
    for (auto& w : workers_)
        if (w.joinable()) w.join();
    workers_.clear();
}

void TeacherServer::handle_connection(TcpConn conn) {
    TeacherSession session(secret_, concept_, policy_, mode_, limits_);
    std::string line;
    try {
        while (conn.read_line(line)) {
            Json reply;
            bool fatal = false;
            try {
                Query query = query_from_json(Json::parse(line, nullptr, true), secret_.order());
                switch (query.kind) {
                    case Query::Kind::Bye:
                        return;
                    case Query::Kind::Member:
                        reply = answer_to_json(answer_yes_no(session.answer_membership(*query.set)));
                        break;
                    case Query::Kind::Equiv: {
                        EquivResult r = session.answer_equivalence(*query.hyp);
                        reply = answer_to_json(r ? answer_counterexample(*r) : answer_finished());
                        break;
                    }
                }
            } catch (const QueryRejected& e) {
                // a refused query is an answer; the session continues
                reply = answer_to_json(answer_rejected(e.reason));
            } catch (const Json::exception&) {
                reply = answer_to_json(answer_rejected("malformed"));
                fatal = true;
            } catch (const ParseError&) {
                reply = answer_to_json(answer_rejected("malformed"));
                fatal = true;
            } catch (const CapacityError&) {
                reply = answer_to_json(answer_rejected("capacity"));
                fatal = true;
            } catch (const Error&) {
                reply = answer_to_json(answer_rejected("invalid"));
                fatal = true;
            }
            conn.write_line(reply.dump());
            if (fatal) return;
        }
    } catch (const NetworkError&) {
        // peer vanished; drop the session
    }
}

SessionResult run_remote_session(const std::string& host, int port, LearnerKind learner, const Concept& target_concept,
                                 int n, long max_rounds) {
    if (n < 1) throw ContractError("universe size must be positive");
    TcpConn conn = TcpConn::connect(host, port);
    Transcript transcript;

    auto check_round_limit = [&]() {
        if (max_rounds > 0 && static_cast<long>(transcript.rounds.size()) >= max_rounds)
            throw ProtocolViolation("round limit exceeded");
    };
    auto exchange = [&](const Query& query) -> Answer {
        check_round_limit();
        Json q = query_to_json(query);
        conn.write_line(q.dump());
        std::string line;
        if (!conn.read_line(line)) throw NetworkError("teacher closed the connection");
        Json parsed;
        try {
            parsed = Json::parse(line);
        } catch (const Json::exception& e) {
            throw ProtocolViolation(std::string("unparseable teacher reply: ") + e.what());
        }
        Answer answer = answer_from_json(parsed, n);
        bool is_equiv = query.kind == Query::Kind::Equiv;
        transcript.rounds.push_back({is_equiv, std::move(q), answer_to_json(answer)});
        (is_equiv ? transcript.equivalence_count : transcript.membership_count) += 1;
        if (answer.kind == Answer::Kind::Rejected) throw QueryRejected(answer.reason);
        return answer;
    };

    LearnerCallbacks cb;
    cb.membership = [&](const VertexSet& s) -> bool {
        Answer a = exchange(Query{Query::Kind::Member, s, std::nullopt});
        if (a.kind == Answer::Kind::Yes) return true;
        if (a.kind == Answer::Kind::No) return false;
        throw ProtocolViolation("expected yes/no to a membership query");
    };
    cb.equivalence = [&](const Hypothesis& h) -> EquivResult {
        Answer a = exchange(Query{Query::Kind::Equiv, std::nullopt, h});
        if (a.kind == Answer::Kind::Finished) return std::nullopt;
        if (a.kind == Answer::Kind::Counterexample) return *a.cex;
        throw ProtocolViolation("expected finished/counterexample to an equivalence query");
    };

    validate_learner_concept(learner, target_concept);
    Hypothesis final_hypothesis = [&] {
        switch (learner) {
            case LearnerKind::VertexCover:
                return Hypothesis::graph_form(target_concept.exact_size
                                                  ? run_fixed_cardinality(BaseLearner::VertexCover, *target_concept.exact_size, n, cb)
                                                  : run_vc_learner(n, cb));
            case LearnerKind::IndependentSet:
                return Hypothesis::graph_form(target_concept.exact_size
                                                  ? run_fixed_cardinality(BaseLearner::IndependentSet, *target_concept.exact_size, n, cb)
                                                  : run_is_learner(n, cb));
            case LearnerKind::DominatingSet:
                return run_ds_learner(n, cb);
            case LearnerKind::FixedVertexCoverTree:
                return Hypothesis::graph_form(run_kvc_learner(n, *target_concept.exact_size, cb));
        }
        throw InternalError("unknown learner kind");
    }();

    transcript.outcome = "finished";
    try {
        conn.write_line(query_to_json(Query{Query::Kind::Bye, std::nullopt, std::nullopt}).dump());
    } catch (const NetworkError&) {
        // server may already have moved on
    }
    return SessionResult{std::move(transcript), std::move(final_hypothesis)};
}

std::pair<std::string, int> parse_host_port(const std::string& address) {
    auto colon = address.rfind(':');
    if (colon == std::string::npos || colon + 1 >= address.size())
        throw UsageError("address must be HOST:PORT: " + address);
    int port = 0;
    try {
        std::size_t used = 0;
        port = std::stoi(address.substr(colon + 1), &used);
        if (used != address.size() - colon - 1) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
        throw UsageError("bad port in address: " + address);
    }
    if (port < 0 || port > 65535) throw UsageError("port out of range: " + address);
    return {address.substr(0, colon), port};
}

}  // namespace vertexlearn
