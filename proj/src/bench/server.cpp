/*
 * Copyright (c) 2026 the rdfbench authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "rdfbench/server.hpp"
#include "rdfbench/sparql/eval.hpp"
#include "rdfbench/sparql/parser.hpp"
#include "rdfbench/sparql/results.hpp"

namespace rdfbench::bench {

struct SparqlServer::Impl {
  const TripleStore& store;
  httplib::Server server;
  std::thread listener;

  explicit Impl(const TripleStore& s) : store(s) {
    auto handle = [this](const httplib::Request& req, httplib::Response& res) {
      std::string text = req.get_param_value("query");
      if (text.empty() && !req.body.empty() &&
          req.get_header_value("Content-Type").rfind(
              "application/sparql-query", 0) == 0)
        text = req.body;
      if (text.empty()) {
        res.status = 400;
        res.set_content("missing query parameter", "text/plain");
        return;
      }
      sparql::QueryAst ast;
      try {
        ast = sparql::parse_query(text);
      } catch (const std::exception& e) {
        res.status = 400;
        res.set_content(std::string("parse error: ") + e.what(), "text/plain");
        return;
      }
      try {
        sparql::EvalResult result = sparql::evaluate(ast, store);
        res.set_content(sparql::to_json(result),
                        "application/sparql-results+json");
      } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(std::string("evaluation error: ") + e.what(),
                        "text/plain");
      }
    };
    server.Get("/sparql", handle);
    server.Post("/sparql", handle);
  }
};

SparqlServer::SparqlServer(const TripleStore& store)
    : impl_(std::make_unique<Impl>(store)) {}

SparqlServer::~SparqlServer() { stop(); }

int SparqlServer::start(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
    if (bound <= 0) throw std::runtime_error("cannot bind " + host);
  } else if (!impl_->server.bind_to_port(host, port)) {
    throw std::runtime_error("cannot bind " + host + ":" +
                             std::to_string(port));
  }
  impl_->listener = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void SparqlServer::wait() {
  if (impl_->listener.joinable()) impl_->listener.join();
}

void SparqlServer::stop() {
  impl_->server.stop();
  wait();
}

}  // namespace rdfbench::bench
