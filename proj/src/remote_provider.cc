// Copyright 2026 The adjprobe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <thread>

#include "adjprobe/errors.h"
#include "adjprobe/providers.h"
#include "httplib.h"
#include "json.hpp"

namespace adjprobe {

using json = nlohmann::json;

Endpoint ParseEndpoint(const std::string& url) {
  std::string rest = url;
  std::string scheme = "http";
  if (const auto pos = rest.find("://"); pos != std::string::npos) {
    scheme = rest.substr(0, pos);
    rest = rest.substr(pos + 3);
  }
  if (scheme != "http") {
    throw ContractError("unsupported endpoint scheme '" + scheme + "'");
  }
  Endpoint endpoint;
  const auto slash = rest.find('/');
  const std::string host_port =
      slash == std::string::npos ? rest : rest.substr(0, slash);
  if (host_port.empty()) throw ContractError("endpoint has no host: " + url);
  endpoint.scheme_host_port = scheme + "://" + host_port;
  if (slash != std::string::npos) {
    endpoint.path_prefix = rest.substr(slash);
    while (!endpoint.path_prefix.empty() &&
           endpoint.path_prefix.back() == '/') {
      endpoint.path_prefix.pop_back();
    }
  }
  return endpoint;
}

std::size_t BatchCount(std::size_t count, std::size_t batch_size) {
  if (batch_size == 0) throw ContractError("batch size must be positive");
  return (count + batch_size - 1) / batch_size;
}

namespace {

bool IsTransient(int status) { return status == 429 || status >= 500; }

std::string ErrorMessage(const httplib::Result& result) {
  if (!result) return httplib::to_string(result.error());
  std::string message = "HTTP " + std::to_string(result->status);
  const json body = json::parse(result->body, nullptr, false);
  if (body.is_object() && body.contains("error") && body["error"].is_string()) {
    message += ": " + body["error"].get<std::string>();
  }
  return message;
}

httplib::Client MakeClient(const Endpoint& endpoint,
                           const RemoteOptions& options) {
  httplib::Client client(endpoint.scheme_host_port);
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_write_timeout(options.timeout);
  return client;
}

// Runs `request` until it yields a 2xx response, retrying transient failures.
template <typename Request>
std::string WithRetries(const std::string& what, const RemoteOptions& options,
                        Request request) {
  auto backoff = options.initial_backoff;
  std::string last_error;
  const int attempts = std::max(1, options.max_attempts);
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    httplib::Result result = request();
    if (result && result->status >= 200 && result->status < 300) {
      return result->body;
    }
    last_error = ErrorMessage(result);
    if (result && !IsTransient(result->status)) break;
    if (attempt < attempts) {
      std::this_thread::sleep_for(backoff);
      backoff = std::min(backoff * 2, options.max_backoff);
    }
  }
  throw TransportError(what + " failed: " + last_error);
}

json ParseBody(const std::string& body, const std::string& what) {
  json parsed;
  try {
    parsed = json::parse(body);
  } catch (const json::out_of_range& e) {
    // Number literals beyond double range (1e999) cannot be finite.
    throw DataError(what + " returned a non-finite number: " + e.what());
  } catch (const json::exception&) {
    throw ProtocolError(what + " returned invalid JSON");
  }
  if (!parsed.is_object()) {
    throw ProtocolError(what + " returned a non-object body");
  }
  return parsed;
}

}  // namespace

std::vector<EmbeddingVector> FetchRemote(const std::string& endpoint_url,
                                         const std::string& model_id,
                                         std::span<const std::string> texts,
                                         const RemoteOptions& options) {
  if (texts.empty()) throw ContractError("no texts to embed");
  const Endpoint endpoint = ParseEndpoint(endpoint_url);
  const std::size_t batches = BatchCount(texts.size(), options.batch_size);
  httplib::Client client = MakeClient(endpoint, options);
  const std::string path = endpoint.path_prefix + "/embed";

  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  std::optional<Eigen::Index> dimension;
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t begin = b * options.batch_size;
    const std::size_t end = std::min(texts.size(), begin + options.batch_size);
    json request = {{"model", model_id},
                    {"texts", json(std::vector<std::string>(
                                  texts.begin() + begin, texts.begin() + end))}};
    const std::string payload = request.dump();
    const std::string what = "POST " + path + " (batch " +
                             std::to_string(b + 1) + "/" +
                             std::to_string(batches) + ")";
    const json response = ParseBody(
        WithRetries(what, options,
                    [&] {
                      return client.Post(path, payload, "application/json");
                    }),
        what);

    const auto vectors = response.find("vectors");
    if (vectors == response.end() || !vectors->is_array()) {
      throw ProtocolError(what + ": response has no 'vectors' array");
    }
    if (vectors->size() != end - begin) {
      throw ProtocolError(what + ": sent " + std::to_string(end - begin) +
                          " texts, received " +
                          std::to_string(vectors->size()) + " vectors");
    }
    if (const auto model = response.find("model");
        model != response.end() && model->is_string() &&
        model->get<std::string>() != model_id) {
      throw ProtocolError(what + ": response is for model '" +
                          model->get<std::string>() + "'");
    }
    std::optional<Eigen::Index> advertised;
    if (const auto dim = response.find("dim");
        dim != response.end() && dim->is_number_integer()) {
      advertised = dim->get<Eigen::Index>();
    }
    for (std::size_t i = 0; i < vectors->size(); ++i) {
      const json& row = (*vectors)[i];
      const std::string& text = texts[begin + i];
      if (!row.is_array() || row.empty()) {
        throw ProtocolError(what + ": vector for '" + text +
                            "' is not a non-empty array");
      }
      EmbeddingVector v(static_cast<Eigen::Index>(row.size()));
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (!row[k].is_number()) {
          throw DataError("vector for '" + text + "' has a non-numeric component");
        }
        v(static_cast<Eigen::Index>(k)) = row[k].get<double>();
      }
      if (!AllFinite(v)) {
        throw DataError("vector for '" + text + "' has a non-finite component");
      }
      if (advertised && *advertised != v.size()) {
        throw DataError("vector for '" + text + "' has dimension " +
                        std::to_string(v.size()) + ", service advertised " +
                        std::to_string(*advertised));
      }
      if (dimension && *dimension != v.size()) {
        throw DataError("vector for '" + text + "' has dimension " +
                        std::to_string(v.size()) + ", earlier vectors have " +
                        std::to_string(*dimension));
      }
      dimension = v.size();
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<RemoteModel> ListRemoteModels(const std::string& endpoint_url,
                                          const RemoteOptions& options) {
  const Endpoint endpoint = ParseEndpoint(endpoint_url);
  httplib::Client client = MakeClient(endpoint, options);
  const std::string path = endpoint.path_prefix + "/models";
  const std::string what = "GET " + path;
  const json response = ParseBody(
      WithRetries(what, options, [&] { return client.Get(path); }), what);
  const auto models = response.find("models");
  if (models == response.end() || !models->is_array()) {
    throw ProtocolError(what + ": response has no 'models' array");
  }
  std::vector<RemoteModel> out;
  for (const json& entry : *models) {
    if (!entry.is_object() || !entry.contains("id") ||
        !entry["id"].is_string() || !entry.contains("dim") ||
        !entry["dim"].is_number_integer()) {
      throw ProtocolError(what + ": malformed model entry");
    }
    out.push_back({entry["id"].get<std::string>(),
                   entry["dim"].get<Eigen::Index>()});
  }
  return out;
}

RemoteProvider::RemoteProvider(std::string endpoint, std::string model_id,
                               RemoteOptions options)
    : endpoint_(std::move(endpoint)),
      model_id_(std::move(model_id)),
      options_(options) {
  ParseEndpoint(endpoint_);
}

std::vector<EmbeddingVector> RemoteProvider::Embed(
    std::span<const std::string> texts) {
  if (texts.empty()) return {};
  return FetchRemote(endpoint_, model_id_, texts, options_);
}

}  // namespace adjprobe
