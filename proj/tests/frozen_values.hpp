// Copyright 2026 the cvopt authors
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


// Generated by tests/oracles/derive_values.py; do not edit.
#pragma once
#include <utility>
#include <vector>
#include "cvopt/cvi/indices.hpp"

namespace frozen {
using cvopt::kInf;

inline const std::vector<std::vector<double>> Y = {
    {0.12, 0.31},
    {0.95, 0.2},
    {0.4, 1.07},
    {0.77, 0.66},
    {3.1, 2.95},
    {3.62, 3.41},
    {2.88, 3.7},
    {5.93, 0.45},
    {6.41, 1.12},
    {5.58, 0.97},
};
inline const std::vector<int> CY = {0, 0, 0, 0, 1, 1, 1, 2, 2, 2};
inline const std::vector<int> CY2 = {0, 1, 1, 0, 2, 1, 0, 2, 2, 1};
inline const std::vector<std::pair<const char*, double>> X4_M2 = {
    {"BallHall", -0.5},
    {"CalinskiHarabasz", 200.0},
    {"DaviesBouldin", -0.1},
    {"Silhouette", 0.899749373433584},
    {"SilhouetteW", 0.899749373433584},
    {"GDunn_d1_D1", 9.0},
    {"GDunn_d1_D2", 9.0},
    {"GDunn_d1_D3", 18.0},
    {"GDunn_d2_D1", 11.0},
    {"GDunn_d2_D2", 11.0},
    {"GDunn_d2_D3", 22.0},
    {"GDunn_d3_D1", 10.0},
    {"GDunn_d3_D2", 10.0},
    {"GDunn_d3_D3", 20.0},
    {"GDunn_d4_D1", 10.0},
    {"GDunn_d4_D2", 10.0},
    {"GDunn_d4_D3", 20.0},
    {"GDunn_d5_D1", 0.5},
    {"GDunn_d5_D2", 0.5},
    {"GDunn_d5_D3", 1.0},
    {"DuNN_2_Max_Const", 10.0},
    {"DuNN_2_Mean_Const", 9.666666666666666},
    {"DuNN_2_Min_Const", 9.0},
    {"DuNN_2_SMax:5_Const", 9.682047473276214},
    {"DuNN_2_SMin:5_Const", 9.655566139665545},
    {"DuNN_2_Max_Min", 10.0},
    {"DuNN_2_Mean_Min", 9.666666666666666},
    {"DuNN_2_Min_Min", 9.0},
    {"DuNN_2_SMax:5_SMin:5", 9.682047473276214},
    {"DuNN_2_SMax:5_Min", 9.682047473276214},
    {"DuNN_2_Max_Max", 10.0},
    {"DuNN_2_Mean_Max", 9.666666666666666},
    {"DuNN_2_Min_Max", 9.0},
    {"DuNN_2_SMin:5_Max", 9.655566139665545},
    {"DuNN_2_SMin:5_SMax:5", 9.655566139665545},
    {"DuNN_2_Max_Mean", 10.0},
    {"DuNN_2_Mean_Mean", 9.666666666666666},
    {"DuNN_2_Min_Mean", 9.0},
    {"DuNN_2_SMin:1_Mean", 9.425903007032305},
    {"DuNN_2_SMax:1_Max", 9.92230442085143},
    {"WCNN_2", -kInf},
};
inline const std::vector<std::pair<const char*, double>> Y_M3 = {
    {"BallHall", -0.6092000000000001},
    {"CalinskiHarabasz", 112.10888128969222},
    {"DaviesBouldin", -0.23380393996948676},
    {"Silhouette", 0.7995609389450385},
    {"SilhouetteW", 0.7986367346086974},
    {"GDunn_d1_D1", 3.0407216734291005},
    {"GDunn_d1_D2", 4.092112449388114},
    {"GDunn_d1_D3", 6.939836296164066},
    {"GDunn_d2_D1", 4.330263261414759},
    {"GDunn_d2_D2", 5.827539020097191},
    {"GDunn_d2_D3", 9.882955883832105},
    {"GDunn_d3_D1", 3.6589652603936487},
    {"GDunn_d3_D2", 4.924126211476024},
    {"GDunn_d3_D3", 8.350853069642291},
    {"GDunn_d4_D1", 3.6319689387774563},
    {"GDunn_d4_D2", 4.887795367802086},
    {"GDunn_d4_D3", 8.289239389491259},
    {"GDunn_d5_D1", 0.4270874845890586},
    {"GDunn_d5_D2", 0.5747615863486202},
    {"GDunn_d5_D3", 0.9747413757360022},
    {"DuNN_3_Max_Const", 3.7546904000196872},
    {"DuNN_3_Mean_Const", 3.456440610686374},
    {"DuNN_3_Min_Const", 3.1297284227229687},
    {"DuNN_3_SMax:5_Const", 3.4835833710216657},
    {"DuNN_3_SMin:5_Const", 3.430921622212702},
    {"DuNN_3_Max_Min", 7.601148532714871},
    {"DuNN_3_Mean_Min", 6.997359483007458},
    {"DuNN_3_Min_Min", 6.335949991523131},
    {"DuNN_3_SMax:5_SMin:5", 5.140545589791419},
    {"DuNN_3_SMax:5_Min", 7.052308395145554},
    {"DuNN_3_Max_Max", 3.6479102766440343},
    {"DuNN_3_Mean_Max", 3.358142451443265},
    {"DuNN_3_Min_Max", 3.0407216734291005},
    {"DuNN_3_SMin:5_Max", 3.3333492007661434},
    {"DuNN_3_SMin:5_SMax:5", 4.152519576859844},
    {"DuNN_3_Max_Mean", 4.991800943741263},
    {"DuNN_3_Mean_Mean", 4.595282610337034},
    {"DuNN_3_Min_Mean", 4.160923972352142},
    {"DuNN_3_SMin:1_Mean", 4.230719242423543},
    {"DuNN_3_SMax:1_Max", 3.589646197576694},
    {"WCNN_3", -kInf},
};
inline const std::vector<std::pair<const char*, double>> Y2_M2 = {
    {"BallHall", -12.767359722222224},
    {"CalinskiHarabasz", 1.8644421054301856},
    {"DaviesBouldin", -2.5535405943200353},
    {"Silhouette", -0.13989500071456712},
    {"SilhouetteW", -0.10260080649051773},
    {"GDunn_d1_D1", 0.09534199633744635},
    {"GDunn_d1_D2", 0.13356808354757296},
    {"GDunn_d1_D3", 0.20704454930911192},
    {"GDunn_d2_D1", 1.0615291316766329},
    {"GDunn_d2_D2", 1.4871349163503862},
    {"GDunn_d2_D3", 2.3052152156390235},
    {"GDunn_d3_D1", 0.5451884194934452},
    {"GDunn_d3_D2", 0.7637743613668091},
    {"GDunn_d3_D3", 1.1839304287593726},
    {"GDunn_d4_D1", 0.2679691509916082},
    {"GDunn_d4_D2", 0.3754077670152756},
    {"GDunn_d4_D3", 0.581921443090363},
    {"GDunn_d5_D1", 0.33896284335587185},
    {"GDunn_d5_D2", 0.47486542258501047},
    {"GDunn_d5_D3", 0.7360912486745115},
    {"DuNN_2_Max_Const", 0.8434453153583819},
    {"DuNN_2_Mean_Const", 0.714927630322358},
    {"DuNN_2_Min_Const", 0.4939635614091388},
    {"DuNN_2_SMax:5_Const", 0.7589358000646099},
    {"DuNN_2_SMin:5_Const", 0.6739943061369782},
    {"DuNN_2_Max_Min", 1.1425064992889238},
    {"DuNN_2_Mean_Min", 0.9684201800533551},
    {"DuNN_2_Min_Min", 0.6691086772851991},
    {"DuNN_2_SMax:5_SMin:5", 0.9720112603989964},
    {"DuNN_2_SMax:5_Min", 1.028032367158774},
    {"DuNN_2_Max_Max", 1.0233545459510505},
    {"DuNN_2_Mean_Max", 0.8674236814102502},
    {"DuNN_2_Min_Max", 0.5993273623049586},
    {"DuNN_2_SMin:5_Max", 0.8177591653791219},
    {"DuNN_2_SMin:5_SMax:5", 0.8622727418883294},
    {"DuNN_2_Max_Mean", 1.0796530298151203},
    {"DuNN_2_Mean_Mean", 0.9151438369754974},
    {"DuNN_2_Min_Mean", 0.6322985568626219},
    {"DuNN_2_SMin:1_Mean", 0.6714991065399187},
    {"DuNN_2_SMax:1_Max", 1.0175816296685538},
    {"WCNN_2", 0.15},
};
inline const std::vector<std::pair<const char*, double>> Y_M9 = {
    {"BallHall", -0.6092000000000001},
    {"CalinskiHarabasz", 112.10888128969222},
    {"DaviesBouldin", -0.23380393996948676},
    {"Silhouette", 0.7995609389450385},
    {"SilhouetteW", 0.7986367346086974},
    {"GDunn_d1_D1", 3.0407216734291005},
    {"GDunn_d1_D2", 4.092112449388114},
    {"GDunn_d1_D3", 6.939836296164066},
    {"GDunn_d2_D1", 4.330263261414759},
    {"GDunn_d2_D2", 5.827539020097191},
    {"GDunn_d2_D3", 9.882955883832105},
    {"GDunn_d3_D1", 3.6589652603936487},
    {"GDunn_d3_D2", 4.924126211476024},
    {"GDunn_d3_D3", 8.350853069642291},
    {"GDunn_d4_D1", 3.6319689387774563},
    {"GDunn_d4_D2", 4.887795367802086},
    {"GDunn_d4_D3", 8.289239389491259},
    {"GDunn_d5_D1", 0.4270874845890586},
    {"GDunn_d5_D2", 0.5747615863486202},
    {"GDunn_d5_D3", 0.9747413757360022},
    {"DuNN_9_Max_Const", 6.341939766349094},
    {"DuNN_9_Mean_Const", 4.414177614732263},
    {"DuNN_9_Min_Const", 3.1297284227229687},
    {"DuNN_9_SMax:5_Const", 5.685204234434972},
    {"DuNN_9_SMin:5_Const", 3.4044347843693505},
    {"DuNN_9_Max_Min", 12.838881775524754},
    {"DuNN_9_Mean_Min", 8.936241374039533},
    {"DuNN_9_Min_Min", 6.335949991523131},
    {"DuNN_9_SMax:5_SMin:5", 8.389364755124854},
    {"DuNN_9_SMax:5_Min", 11.509359553195962},
    {"DuNN_9_Max_Max", 6.161580525361298},
    {"DuNN_9_Mean_Max", 4.288642249605838},
    {"DuNN_9_Min_Max", 3.0407216734291005},
    {"DuNN_9_SMin:5_Max", 3.3076156255120934},
    {"DuNN_9_SMin:5_SMax:5", 4.120461976953877},
    {"DuNN_9_Max_Mean", 8.431507671217222},
    {"DuNN_9_Mean_Mean", 5.868578667084384},
    {"DuNN_9_Min_Mean", 4.160923972352142},
    {"DuNN_9_SMin:1_Mean", 4.195340278291974},
    {"DuNN_9_SMax:1_Max", 6.009327410232786},
    {"WCNN_9", -kInf},
};
inline const std::vector<double> smin5_z100_tail = {0.002942235312357026, 0.005048895986167263, 0.00832422220594647, 0.013186183841753175, 0.020068864872467965, 0.02934639183044774, 0.041230142493922685, 0.05565487098303519, 0.07218047664740017, 0.08994241235303119, 0.10768061775011051, 0.12386219324271261, 0.13688889382091196, 0.1453536302752116, 0.1482899683845245};
inline const std::vector<double> smin5_z7 = {0.08757660148555313, 0.10912716525507199, 0.1306489370316353, 0.15028204911603782, 0.16608735019186108, 0.17635761835259553, 0.17992027856724516};
inline const std::vector<std::pair<std::vector<int>, std::vector<int>>> ari_pairs = {
    {{1, 1, 2, 2, 3, 3, 3}, {1, 2, 2, 2, 3, 3, 1}},
    {{1, 2, 3, 4, 5, 6}, {1, 1, 2, 2, 3, 3}},
    {{2, 2, 2, 1, 1, 1, 1, 3}, {5, 5, 7, 7, 7, 1, 1, 1}},
};
inline const std::vector<double> ari_values = {0.2125, 0.0, 0.13043478260869565};
inline const std::vector<std::vector<double>> linkage_diss = {
    {0.0, 0.6886728545946637, 0.32578948040387246, 0.624470342082209, 0.4624449946803716, 0.6975839908421885},
    {0.6886728545946637, 0.0, 0.8040345588018745, 0.9740579425089911, 0.24366787053736536, 0.4756398930693595},
    {0.32578948040387246, 0.8040345588018745, 0.0, 0.29950708950004656, 0.6414351844570793, 0.5951347349402656},
    {0.624470342082209, 0.9740579425089911, 0.29950708950004656, 0.0, 0.8670467368436917, 0.619112385276599},
    {0.4624449946803716, 0.24366787053736536, 0.6414351844570793, 0.8670467368436917, 0.0, 0.5291373635527069},
    {0.6975839908421885, 0.4756398930693595, 0.5951347349402656, 0.619112385276599, 0.5291373635527069, 0.0},
};
inline const std::vector<std::vector<double>> linkage_merges = {
    {1.0, 4.0, 0.24366787053736536, 2.0},
    {2.0, 3.0, 0.29950708950004656, 2.0},
    {5.0, 6.0, 0.5291373635527069, 3.0},
    {0.0, 7.0, 0.624470342082209, 3.0},
    {8.0, 9.0, 0.9740579425089911, 6.0},
};
inline const std::vector<double> quantile_sample = {3.0, 1.0, 4.0, 1.5, 9.0, 2.6};
inline const std::vector<double> quantile_levels = {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
inline const std::vector<double> quantile_values = {1.0, 1.25, 1.775, 2.8, 3.75, 6.5, 9.0};
inline const double sd_sample = 2.891654658956817;

}  // namespace frozen
