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
#pragma once

#include <memory>
#include <string>

#include "rdfbench/store.hpp"

namespace rdfbench::bench {

/// Minimal SPARQL-protocol endpoint over an immutable store: GET and POST
/// on /sparql with a `query` parameter (form-encoded or query string),
/// results JSON back. Requests run concurrently on the library's worker
/// pool; evaluation is read-only. Malformed queries get HTTP 400,
/// evaluation failures HTTP 500. There is no server-side timeout — the
/// harness enforces deadlines client-side.
class SparqlServer {
 public:
  explicit SparqlServer(const TripleStore& store);
  ~SparqlServer();
  SparqlServer(const SparqlServer&) = delete;
  SparqlServer& operator=(const SparqlServer&) = delete;

  /// Binds and starts serving on a background thread; returns the bound
  /// port (useful with port 0 for an ephemeral one). Throws
  /// std::runtime_error when binding fails.
  int start(const std::string& host, int port);

  /// Blocks until stop() is called from elsewhere.
  void wait();

  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rdfbench::bench
