/*
 * Copyright 2026 The braidrep Authors
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

// Reference matrices transcribed verbatim from the published derivation,
// misprints included. Entries use the polynomial grammar; L0, L1, L2 are
// placeholders for diagonal parameters and are replaced before parsing.

#ifndef BRAIDREP_TESTS_PRINTED_HPP
#define BRAIDREP_TESTS_PRINTED_HPP

#include <string>
#include <vector>

namespace printed {

using Printed = std::vector<std::vector<std::string>>;

inline const Printed lk3_s1 = {
    {"t^2q", "0", "t(t-1)"},
    {"0", "0", "t"},
    {"0", "1", "1-t"}};

inline const Printed lk3_s2 = {
    {"0", "t", "0"},
    {"1", "1-t", "0"},
    {"0", "qt(t-1)", "t^2q"}};

inline const Printed lk4_s1 = {
    {"qt^2", "0", "t(t-1)", "0", "t(t-1)", "0"},
    {"0", "0", "t", "0", "0", "0"},
    {"0", "1", "1-t", "0", "0", "0"},
    {"0", "0", "0", "0", "t", "0"},
    {"0", "0", "0", "1", "1-t", "0"},
    {"0", "0", "0", "0", "0", "1"}};

inline const Printed lk4_s2 = {
    {"0", "t", "0", "0", "0", "0"},
    {"1", "1-t", "0", "0", "0", "0"},
    {"0", "qt(1-t)", "qt^2", "0", "0", "t(t-1)"},
    {"0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "t"},
    {"0", "0", "0", "0", "1", "1-t"}};

inline const Printed lk4_s3 = {
    {"1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "t", "0", "0"},
    {"0", "0", "0", "0", "t", "0"},
    {"0", "1", "0", "1-t", "0", "0"},
    {"0", "0", "1", "0", "1-t", "0"},
    {"0", "0", "0", "qt(1-t)t", "qt(1-t)", "qt^2"}};

inline const Printed lk5_s3 = {
    {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "t", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "1-t", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "1", "1-t", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "qt(t-1)", "0", "0", "qt(t-1)", "0", "qt^2", "0", "t(t-1)"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "1", "t"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "1-t"}};

inline const Printed lk5_s3_product = {
    {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "t", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "1-t", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "1", "1-t", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "qt(t-1)", "0", "0", "t(t-1)", "0", "qt^2", "0", "t(t-1)"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "1", "t"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "1-t"}};

inline const Printed lk4_s1_conjugated = {
    {"qt^2", "0", "t(t-1)", "0", "t(t-1)", "0"},
    {"0", "0", "t", "0", "0", "0"},
    {"0", "1", "1-t", "0", "0", "0"},
    {"0", "0", "0", "0", "t", "0"},
    {"0", "0", "0", "1", "1-t", "0"},
    {"0", "0", "0", "0", "0", "1"}};

inline const Printed lk4_s2_conjugated = {
    {"0", "t", "0", "0", "0", "0"},
    {"1", "1-t", "0", "0", "0", "0"},
    {"0", "qt(t-1)", "qt^2", "0", "0", "t(t-1)"},
    {"0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "t"},
    {"0", "0", "0", "0", "1", "1-t"}};

inline const Printed lk4_s3_conjugated = {
    {"1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "t", "0", "0"},
    {"0", "0", "0", "0", "t", "0"},
    {"0", "1", "0", "1-t", "0", "0"},
    {"0", "0", "1", "0", "1-t", "0"},
    {"0", "0", "0", "qt(t-1)t", "qt(t-1)", "qt^2"}};

inline const Printed c3 = {
    {"1", "-1", "0"},
    {"0", "1", "0"},
    {"0", "-1", "1"}};

inline const Printed c4 = {
    {"1", "-1", "0", "0", "0", "0"},
    {"0", "1", "0", "-1", "0", "0"},
    {"0", "-1", "1", "1", "-1", "0"},
    {"0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "-1", "1", "0"},
    {"0", "0", "0", "0", "-1", "1"}};

inline const Printed c4_inv = {
    {"1", "1", "0", "1", "0", "0"},
    {"0", "1", "0", "1", "0", "0"},
    {"0", "1", "1", "1", "1", "0"},
    {"0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "1", "1", "0"},
    {"0", "0", "0", "1", "1", "1"}};

inline const Printed c5 = {
    {"1", "-1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "0", "-1", "0", "0", "-1", "0", "0", "0"},
    {"0", "-1", "1", "1", "-1", "0", "1", "-1", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "-1", "0", "0", "0"},
    {"0", "0", "0", "-1", "1", "0", "1", "-1", "0", "0"},
    {"0", "0", "0", "0", "-1", "1", "0", "1", "-1", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-1", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-1", "1", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "-1", "1"}};

inline const Printed c5_inv = {
    {"1", "1", "0", "1", "0", "0", "1", "0", "0", "0"},
    {"0", "1", "0", "1", "0", "0", "1", "0", "0", "0"},
    {"0", "1", "1", "1", "1", "0", "1", "1", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "1", "1", "0", "1", "1", "0", "0"},
    {"0", "0", "0", "1", "1", "1", "1", "1", "1", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "1", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "1", "1", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "1", "1", "1"}};

inline const Printed rep3_s1_lambda = {
    {"L0q", "(1+q)L1", "L2"},
    {"0", "L1", "L2"},
    {"0", "0", "L2"}};

inline const Printed rep3_s2_lambda = {
    {"L2", "0", "0"},
    {"-L1", "L1", "0"},
    {"L0", "-L0(1+q)", "L0q"}};

inline const Printed pascal3 = {
    {"1", "(1+q+q^2)", "(1+q+q^2)", "1"},
    {"0", "1", "(1+q)", "1"},
    {"0", "0", "1", "1"},
    {"0", "0", "0", "1"}};

inline const Printed pascal3_s2_core = {
    {"1", "0", "0", "0"},
    {"-1", "1", "0", "0"},
    {"1", "-(1+q)", "1", "0"},
    {"-1", "(1+q+q^2)", "-(1+q+q^2)", "1"}};

inline const Printed pascal4 = {
    {"1", "(1+q)(1+q^2)", "(1+q^2)(1+q+q^2)", "(1+q)(1+q^2)", "1"},
    {"0", "1", "1+q+q^2", "1+q+q^2", "1"},
    {"0", "0", "1", "1+q", "1"},
    {"0", "0", "0", "1", "1"},
    {"0", "0", "0", "0", "1"}};

inline const Printed pascal4_s2_core = {
    {"1", "0", "0", "0", "0"},
    {"-1", "1", "0", "0", "0"},
    {"1", "-(1+q)", "1", "0", "0"},
    {"-1", "(1+q+q^2)", "-(1+q+q^2)", "1", "0"},
    {"1", "-(1+q)(1+q^2)", "(1+q^2)(1+q+q^2)", "-(1+q)(1+q^2)", "1"}};

inline const Printed t3_s1 = {
    {"t^2q", "-t^2(1+q)", "t^2"},
    {"0", "-t", "t"},
    {"0", "0", "1"}};

inline const Printed t3_s2 = {
    {"1", "0", "0"},
    {"1", "-t", "0"},
    {"1", "-t(1+q)", "t^2q"}};

inline const Printed t4_s1_core = {
    {"1", "-(1+q+q^2)", "(1+q+q^2)", "-1"},
    {"0", "1", "-(1+q)", "1"},
    {"0", "0", "1", "-1"},
    {"0", "0", "0", "1"}};

inline const Printed t4_s2_core = {
    {"1", "0", "0", "0"},
    {"1", "0", "0", "0"},
    {"1", "(1+q)", "1", "0"},
    {"1", "(1+q+q^2)", "(1+q+q^2)", "1"}};

inline const Printed t5_s1_core = {
    {"1", "-(1+q)(1+q^2)", "(1+q^2)(1+q+q^2)", "-(1+q)(1+q^2)", "-1"},
    {"0", "1", "-(1+q+q^2)", "(1+q+q^2)", "-1"},
    {"0", "0", "1", "-(1+q)", "1"},
    {"0", "0", "0", "1", "-1"},
    {"0", "0", "0", "0", "1"}};

inline const Printed t5_s2_core = {
    {"1", "0", "0", "0", "0"},
    {"1", "1", "0", "0", "0"},
    {"1", "(1+q)", "1", "0", "0"},
    {"1", "(1+q+q^2)", "(1+q+q^2)", "1", "0"},
    {"1", "(1+q)(1+q^2)", "(1+q^2)(1+q+q^2)", "(1+q)(1+q^2)", "1"}};

inline const Printed burau3_s1 = {
    {"-t", "t"},
    {"0", "1"}};

inline const Printed burau3_s2 = {
    {"1", "0"},
    {"1", "-t"}};

inline const Printed burau4_s1 = {
    {"-t", "t", "0"},
    {"0", "1", "0"},
    {"0", "0", "1"}};

inline const Printed burau4_s2 = {
    {"1", "0", "0"},
    {"1", "-t", "t"},
    {"0", "0", "1"}};

inline const Printed burau4_s3 = {
    {"1", "0", "0"},
    {"0", "1", "0"},
    {"0", "1", "-t"}};

inline const Printed burau5_s1 = {
    {"-t", "t", "0", "0"},
    {"0", "1", "0", "0"},
    {"0", "0", "1", "0"},
    {"0", "0", "0", "1"}};

inline const Printed burau5_s2 = {
    {"1", "0", "0", "0"},
    {"1", "-t", "t", "0"},
    {"0", "0", "1", "0"},
    {"0", "0", "0", "1"}};

inline const Printed burau5_s3 = {
    {"1", "0", "0", "0"},
    {"0", "1", "0", "0"},
    {"0", "1", "-t", "t"},
    {"0", "0", "0", "1"}};

inline const Printed burau5_s4 = {
    {"1", "0", "0", "0"},
    {"0", "1", "0", "0"},
    {"0", "0", "1", "0"},
    {"0", "0", "1", "-t"}};

inline const Printed sym2q4_s1 = {
    {"t^2q", "-t^2(1+q)", "t^2", "0", "0", "0"},
    {"0", "-t", "t", "0", "0", "0"},
    {"0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "-t", "t", "0"},
    {"0", "0", "0", "0", "1", "0"},
    {"0", "0", "0", "0", "0", "1"}};

inline const Printed sym2q4_s3 = {
    {"1", "0", "0", "0", "0", "0"},
    {"0", "1", "0", "0", "0", "0"},
    {"0", "0", "1", "0", "0", "0"},
    {"0", "1", "0", "-t", "0", "0"},
    {"0", "0", "1", "0", "-t", "0"},
    {"0", "0", "1", "0", "-t(1+q)", "t^2q"}};

inline const Printed sym2q4_s2 = {
    {"1", "0", "0", "0", "0", "0"},
    {"1", "-t", "0", "t", "0", "0"},
    {"1", "-t(1+q)", "t^2q", "t(1+q)", "-t^2(1+q)", "t^2"},
    {"0", "0", "0", "1", "0", "0"},
    {"0", "0", "0", "1", "-t", "t"},
    {"0", "0", "0", "0", "0", "1"}};

inline const Printed ext2_s1 = {
    {"-t", "0", "0"},
    {"0", "-t", "t"},
    {"0", "0", "1"}};

inline const Printed ext2_s2 = {
    {"-t", "t", "0"},
    {"0", "1", "0"},
    {"0", "1", "-t"}};

inline const Printed ext2_s3 = {
    {"1", "0", "0"},
    {"1", "-t", "0"},
    {"0", "0", "-t"}};

inline const Printed trefoil_b = {
    {"0", "0", "t^4q"},
    {"0", "-tq^2", "t^3q"},
    {"1", "-t(1+q)", "t^2q"}};

inline const Printed trefoil_a = {
    {"t^2(t^2q-t(1+q)+1)", "(1+q)t^3(tq-1)(t^2q-t+1)", "t^4q(t^4q^2+t^2(1+q)(1-tq)+t^2q-t(1+q)+1)"},
    {"-t(t-1)", "-t^4q+t^2(1+q)(t-1)", "t^3q(t^2-t+1)"},
    {"1", "-t(1+q)", "t^2q"}};

inline const Printed burau3_s1s2cubed = {
    {"t^3-t^2", "-t^4"},
    {"t^2-t+1", "-t^3"}};

} // namespace printed

#endif
