// Copyright 2026 The nsop Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "nsop/c_api.h"

namespace {

const std::filesystem::path kData = NSOP_TEST_DATA_DIR;

TEST(CApiTest, ParseAndQuery) {
  const char text[] = "2 3  1 1 1  1 1  2 2 3";
  nsop_instance* inst = nullptr;
  ASSERT_EQ(nsop_instance_parse(text, std::strlen(text), "t", &inst), NSOP_OK);
  EXPECT_STREQ(nsop_instance_name(inst), "t");
  EXPECT_EQ(nsop_instance_num_rows(inst), 2);
  EXPECT_EQ(nsop_instance_num_cols(inst), 3);
  EXPECT_NEAR(nsop_instance_density(inst), 50.0, 1e-12);
  nsop_instance_free(inst);
}

TEST(CApiTest, ErrorCodes) {
  nsop_instance* inst = nullptr;
  const char bad[] = "2 3  1 1 1  1 5  2 2 3";
  EXPECT_EQ(nsop_instance_parse(bad, std::strlen(bad), nullptr, &inst),
            NSOP_ERR_PARSE);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::string(nsop_last_error()).find("outside"), std::string::npos);
  EXPECT_EQ(nsop_instance_load_file("/no/such/file", nullptr, &inst),
            NSOP_ERR_IO);
  EXPECT_EQ(nsop_instance_parse(nullptr, 0, nullptr, &inst),
            NSOP_ERR_INVALID_ARGUMENT);
  nsop_catalog* cat = nullptr;
  EXPECT_EQ(nsop_catalog_load_file("/no/such/catalog", &cat), NSOP_ERR_IO);
  nsop_instance_free(nullptr);
  nsop_search_result_free(nullptr);
  nsop_catalog_free(nullptr);
  nsop_report_free(nullptr);
}

TEST(CApiTest, SearchOnFixture) {
  nsop_instance* inst = nullptr;
  ASSERT_EQ(nsop_instance_load_file((kData / "scptoy1.txt").c_str(), nullptr,
                                    &inst),
            NSOP_OK)
      << nsop_last_error();
  EXPECT_STREQ(nsop_instance_name(inst), "scptoy1");
  nsop_search_params p;
  nsop_search_params_default(&p);
  EXPECT_EQ(p.k_init, 5);
  EXPECT_EQ(p.delta, 5);
  EXPECT_EQ(p.l_limit, 5);
  nsop_search_result* res = nullptr;
  ASSERT_EQ(nsop_search_run(inst, &p, &res), NSOP_OK) << nsop_last_error();
  EXPECT_EQ(nsop_search_result_cost(res), 1);
  EXPECT_EQ(nsop_search_result_initial_cost(res), 1);
  EXPECT_EQ(nsop_search_result_final_k(res), 25);
  EXPECT_EQ(nsop_search_result_guarantee(res), 1);
  ASSERT_EQ(nsop_search_result_num_iterations(res), 5u);
  nsop_iteration it;
  ASSERT_EQ(nsop_search_result_iteration(res, 4, &it), NSOP_OK);
  EXPECT_EQ(it.t, 5);
  EXPECT_EQ(it.k, 25);
  EXPECT_EQ(it.status, NSOP_SOLVE_INFEASIBLE);
  EXPECT_STREQ(nsop_solve_status_name(it.status), "infeasible");
  EXPECT_EQ(nsop_search_result_iteration(res, 5, &it),
            NSOP_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(nsop_search_result_columns(res, nullptr, 0), 1u);
  int32_t col = -1;
  nsop_search_result_columns(res, &col, 1);
  EXPECT_EQ(col, 2);
  nsop_search_result_free(res);

  p.l_limit = 0;
  EXPECT_EQ(nsop_search_run(inst, &p, &res), NSOP_ERR_CONTRACT);
  nsop_instance_free(inst);
}

TEST(CApiTest, Catalogs) {
  nsop_catalog* cat = nullptr;
  ASSERT_EQ(nsop_catalog_bundled(&cat), NSOP_OK);
  EXPECT_EQ(nsop_catalog_size(cat), 65u);
  EXPECT_EQ(nsop_catalog_lookup(cat, "4.1"), 429);
  EXPECT_EQ(nsop_catalog_lookup(cat, "scpnrh5"), 55);
  EXPECT_EQ(nsop_catalog_lookup(cat, "nope"), 0);
  nsop_catalog_free(cat);
  ASSERT_EQ(nsop_catalog_load_file((kData / "toy_catalog.txt").c_str(), &cat),
            NSOP_OK);
  EXPECT_EQ(nsop_catalog_size(cat), 3u);
  nsop_catalog_free(cat);
}

TEST(CApiTest, BenchAndEmit) {
  nsop_catalog* cat = nullptr;
  ASSERT_EQ(nsop_catalog_load_file((kData / "toy_catalog.txt").c_str(), &cat),
            NSOP_OK);
  nsop_search_params p;
  nsop_search_params_default(&p);
  p.nsop_time_limit_s = 5;
  nsop_report* report = nullptr;
  ASSERT_EQ(nsop_bench_run(kData.c_str(), cat, &p, "TOY*", 1, &report), NSOP_OK)
      << nsop_last_error();
  EXPECT_EQ(nsop_report_num_rows(report), 1u);
  EXPECT_EQ(nsop_report_num_errors(report), 0u);
  EXPECT_EQ(nsop_report_average_deviation(report), 0.0);
  const auto out = std::filesystem::temp_directory_path() / "nsop_capi.json";
  ASSERT_EQ(nsop_report_emit(report, NSOP_FORMAT_JSON, out.c_str()), NSOP_OK);
  std::ifstream in(out);
  const std::string body((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  EXPECT_NE(body.find("\"instance\": \"TOY1\""), std::string::npos) << body;
  std::filesystem::remove(out);
  EXPECT_EQ(nsop_report_emit(report, static_cast<nsop_report_format>(9), nullptr),
            NSOP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(nsop_report_emit(report, NSOP_FORMAT_CSV, "/no/such/dir/x.csv"),
            NSOP_ERR_IO);
  nsop_report_free(report);

  EXPECT_EQ(nsop_bench_run(kData.c_str(), cat, &p, "zzz", 1, &report),
            NSOP_ERR_INVALID_ARGUMENT);
  p.k_init = 0;
  EXPECT_EQ(nsop_bench_run(kData.c_str(), cat, &p, nullptr, 1, &report),
            NSOP_ERR_CONTRACT);
  nsop_catalog_free(cat);
}

}  // namespace
