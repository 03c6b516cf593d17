// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "vertexlearn/session.hpp"

namespace vertexlearn {

/// Line-oriented TCP connection: UTF-8 JSON, one message per LF-terminated line.
class TcpConn {
  public:
    explicit TcpConn(int fd) : fd_(fd) {}
    TcpConn(const TcpConn&) = delete;
    TcpConn& operator=(const TcpConn&) = delete;
    TcpConn(TcpConn&& o) noexcept;
    TcpConn& operator=(TcpConn&& o) noexcept;
    ~TcpConn();

    static TcpConn connect(const std::string& host, int port);

    /// False on orderly EOF before any byte of a line.
    bool read_line(std::string& line);
    void write_line(const std::string& line);
    void close();

  private:
    int fd_ = -1;
    std::string buffer_;
};

class TcpListener {
  public:
    /// Port 0 binds an ephemeral port; port() reports the actual one.
    static TcpListener bind(const std::string& host, int port);
    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;
    TcpListener(TcpListener&& o) noexcept;
    ~TcpListener();

    int port() const { return port_; }
    /// Blocks; throws NetworkError once the listener is closed.
    TcpConn accept();
    void close();

  private:
    TcpListener(int fd, int port) : fd_(fd), port_(port) {}
    int fd_ = -1;
    int port_ = 0;
};

/// Serves teacher sessions: one session per connection, queries answered
/// strictly in order, connection closed after bye or a malformed message.
/// Connections are handled concurrently with isolated session state.
class TeacherServer {
  public:
    TeacherServer(const std::string& host, int port, Graph secret, Concept target_concept, TeacherPolicy policy,
                  TeacherMode mode = TeacherMode::Auto, TeacherLimits limits = {});
    ~TeacherServer();

    int port() const { return listener_.port(); }
    /// Accept loop; returns when stop() closes the listener.
    void serve();
    /// Accept loop on a background thread.
    void start();
    void stop();

  private:
    void handle_connection(TcpConn conn);

    TcpListener listener_;
    Graph secret_;
    Concept concept_;
    TeacherPolicy policy_;
    TeacherMode mode_;
    TeacherLimits limits_;
    std::thread accept_thread_;
    std::vector<std::thread> workers_;
    std::mutex workers_mutex_;
    std::atomic<bool> stopping_{false};
};

/// Drive a learner against a served teacher. Produces the same transcript bytes
/// as the in-process run with identical configuration; the ground-truth audit is
/// necessarily skipped (the secret stays on the server).
SessionResult run_remote_session(const std::string& host, int port, LearnerKind learner, const Concept& target_concept,
                                 int n, long max_rounds = 0);

/// "host:port" split; the port must parse.
std::pair<std::string, int> parse_host_port(const std::string& address);

}  // namespace vertexlearn
