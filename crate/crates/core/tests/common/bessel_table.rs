// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

// Reference values of principal-branch I and K computed with 40-digit
// arithmetic: (order, argument, I, K).
pub const TABLE: &[((f64, f64), (f64, f64), (f64, f64), (f64, f64))] = &[
    ((0.0, 0.0), (0.1, 0.0), (1.0025015629340956, 0.0), (2.4270690247020164, 0.0)),
    ((0.0, 0.0), (1.5, 0.0), (1.646723189772891, 0.0), (0.21380556264752573, 0.0)),
    ((0.0, 0.0), (2.5, 0.0), (3.289839144050123, 0.0), (0.06234755320036619, 0.0)),
    ((0.0, 0.0), (7.0, 0.0), (168.5939085102897, 0.0), (0.0004247957418692318, 0.0)),
    ((0.0, 0.0), (30.0, 0.0), (781672297823.9775, 0.0), (2.1324774964630563e-14, 0.0)),
    ((0.0, 0.0), (42.42640687119285, 42.42640687119285), (-5.087796085784336e+16, -1.2764727074061405e+17), (2.3959040835415e-20, 5.571085783517692e-20)),
    ((0.0, 0.0), (-2.403430846640801, 1.7954164323118695), (0.3580747149935638, -2.6005119413711695), (-8.201558078590464, -1.070066174897788)),
    ((0.0, 0.0), (-9.899924966004454, -1.4112000805986722), (586.5628897841513, 2478.7148359521057), (-7787.112317196675, 1842.7416458410198)),
    ((0.0, 0.0), (0.0, 5.0), (-0.1775967713143383, 0.0), (0.4846183524926667, 0.27896835603119585)),
    ((0.0, 0.0), (-4.0, 0.0), (11.30192195213633, 0.0), (0.011159676085853025, -35.50603497627671)),
    ((0.0, 0.0), (0.03536860083385145, 0.4987474933020272), (0.9390569785647443, 0.00854991449228329), (0.7121165543311544, -1.3932521193292888)),
    ((0.0, 0.0), (23.883412228140152, -7.388005166533489), (1094389329.121049, -1541040257.3009746), (3.302989499500365e-12, 1.0054546209036018e-11)),
    ((0.0, 0.0), (-2.0, -0.001), (2.27958456020268, 0.001590636646943566), (0.1088966484315765, 7.1613862417321)),
    ((0.0, 0.0), (0.0015926534214665267, 1.9999993658636692), (0.22389106309611426, 0.0009185230729619717), (-0.8002544359839865, -0.3514194921437598)),
    ((1.0, 0.0), (0.1, 0.0), (0.050062526047092694, 0.0), (9.853844780870606, 0.0)),
    ((1.0, 0.0), (1.5, 0.0), (0.9816664285779075, 0.0), (0.2773878004568438, 0.0)),
    ((1.0, 0.0), (2.5, 0.0), (2.5167162452886984, 0.0), (0.07389081634774707, 0.0)),
    ((1.0, 0.0), (7.0, 0.0), (156.03909286995545, 0.0), (0.00045418248688489695, 0.0)),
    ((1.0, 0.0), (30.0, 0.0), (768532038938.957, 0.0), (2.1677320018915495e-14, 0.0)),
    ((1.0, 0.0), (42.42640687119285, 42.42640687119285), (-4.98215280665263e+16, -1.271967448440012e+17), (2.442657913655956e-20, 5.589875734831252e-20)),
    ((1.0, 0.0), (-2.403430846640801, 1.7954164323118695), (0.028342263068490768, 2.317097483731804), (-7.238544460319287, 0.029953697524555414)),
    ((1.0, 0.0), (-9.899924966004454, -1.4112000805986722), (-538.2265453459123, -2357.0935945448846), (-7405.027922174027, 1690.888581358312)),
    ((1.0, 0.0), (0.0, 5.0), (0.0, -0.32757913759146523), (0.5145601060633136, 0.23226288250728622)),
    ((1.0, 0.0), (-4.0, 0.0), (-9.75946515370445, 0.0), (-0.012483498887268431, -30.660264029843482)),
    ((1.0, 0.0), (0.03536860083385145, 0.4987474933020272), (0.01606546671549533, 0.24181275543930295), (-0.24107317658800126, -2.281804499322556)),
    ((1.0, 0.0), (23.883412228140152, -7.388005166533489), (1064000193.4018692, -1517932986.9359963), (3.307219763146618e-12, 1.0264212532150803e-11)),
    ((1.0, 0.0), (-2.0, -0.001), (-1.5906362315560578, -0.0014842666740741142), (-0.1445287097229189, 4.997314926329909)),
    ((1.0, 0.0), (0.0015926534214665267, 1.9999993658636692), (-0.00010268060882176504, 0.5767253563400995), (-0.9045073632343664, -0.168287600558415)),
    ((2.0, 0.0), (0.1, 0.0), (0.0012510419922417593, 0.0), (199.5039646421141, 0.0)),
    ((2.0, 0.0), (1.5, 0.0), (0.33783461833568074, 0.0), (0.5836559632566508, 0.0)),
    ((2.0, 0.0), (2.5, 0.0), (1.2764661478191643, 0.0), (0.12146020627856384, 0.0)),
    ((2.0, 0.0), (7.0, 0.0), (124.01131054744528, 0.0), (0.0005545621666934881, 0.0)),
    ((2.0, 0.0), (30.0, 0.0), (730436828561.3804, 0.0), (2.2769929632558262e-14, 0.0)),
    ((2.0, 0.0), (42.42640687119285, 42.42640687119285), (-4.67056001522112e+16, -1.2582351939130966e+17), (2.5852327173066476e-20, 5.645266418958499e-20)),
    ((2.0, 0.0), (-2.403430846640801, 1.7954164323118695), (-0.5512666690593576, -1.3516520009451976), (-4.323531322711275, 1.8019804983190644)),
    ((2.0, 0.0), (-9.899924966004454, -1.4112000805986722), (413.46822809941756, 2027.204748358674), (-6368.651543228784, 1298.9487242024516)),
    ((2.0, 0.0), (0.0, 5.0), (-0.046565116277752214, 0.0), (0.5775235054955812, 0.07314431360587043)),
    ((2.0, 0.0), (-4.0, 0.0), (6.4221893752841055, 0.0), (0.01740142552948724, -20.175902961354968)),
    ((2.0, 0.0), (0.03536860083385145, 0.4987474933020272), (-0.030316771061482617, 0.004230173927595297), (-8.46044900724406, -1.077008839263714)),
    ((2.0, 0.0), (23.883412228140152, -7.388005166533489), (977184682.785777, -1450184000.2269304), (3.3130875401863007e-12, 1.0917196371594703e-11)),
    ((2.0, 0.0), (-2.0, -0.001), (0.6889479841724291, 0.0009016882608845774), (0.2509266651838263, 2.164000300393815)),
    ((2.0, 0.0), (0.0015926534214665267, 1.9999993658636692), (-0.35283402861542307, 0.0003565806906861783), (-0.9692622665571592, 0.5529535723887066)),
    ((-1.5, 0.0), (0.1, 0.0), (-25.10485302727399, 0.0), (39.44783522676986, 0.0)),
    ((-1.5, 0.0), (1.5, 0.0), (0.3654788341524272, 0.0), (0.3805584203804424, 0.0)),
    ((-1.5, 0.0), (2.5, 0.0), (1.8152872165501959, 0.0), (0.09109232041561398, 0.0)),
    ((-1.5, 0.0), (7.0, 0.0), (141.73436032759682, 0.0), (0.0004936754061774415, 0.0)),
    ((-1.5, 0.0), (30.0, 0.0), (752420533212.4315, 0.0), (2.2126121514878785e-14, 0.0)),
    ((-1.5, 0.0), (42.42640687119285, 42.42640687119285), (-4.851352084928518e+16, -1.2662845221988947e+17), (2.501641290422184e-20, 5.613136286149372e-20)),
    ((-1.5, 0.0), (-2.403430846640801, 1.7954164323118695), (1.9279099940316757, -0.3093361031395984), (-5.992615576341146, 1.025965540132235)),
    ((-1.5, 0.0), (-9.899924966004454, -1.4112000805986722), (2213.5065290075486, -482.75178931914974), (-6953.93582840819, 1516.6094764911024)),
    ((-1.5, 0.0), (0.0, 5.0), (-0.22763495664752412, -0.22763495664752412), (0.546003377128734, 0.16913293037535884)),
    ((-1.5, 0.0), (-4.0, 0.0), (0.0, 8.163499628254995), (0.0, -25.66073749042966)),
    ((-1.5, 0.0), (0.03536860083385145, 0.4987474933020272), (1.609791686559726, 1.938242477367521), (-2.619560677775612, -2.932800702286788)),
    ((-1.5, 0.0), (23.883412228140152, -7.388005166533489), (1027046963.5713428, -1489417956.9774952), (3.3109435486401596e-12, 1.0531861571733067e-11)),
    ((-1.5, 0.0), (-2.0, -0.001), (0.0013838855753024947, -0.9849406294864926), (-0.004092737119249422, 3.274188699500018)),
    ((-1.5, 0.0), (0.0015926534214665267, 1.9999993658636692), (0.2791494941482023, 0.28034662638716384), (-0.9839217885789528, 0.10557873954674714)),
    ((0.5, 0.0), (0.1, 0.0), (0.25273398460013197, 0.0), (3.58616683879726, 0.0)),
    ((0.5, 0.0), (1.5, 0.0), (1.3871617204034778, 0.0), (0.22833505222826544, 0.0)),
    ((0.5, 0.0), (2.5, 0.0), (3.0530935381967184, 0.0), (0.06506594315400999, 0.0)),
    ((0.5, 0.0), (7.0, 0.0), (165.35679954854365, 0.0), (0.00043196598040526124, 0.0)),
    ((0.5, 0.0), (30.0, 0.0), (778366068840.4464, 0.0), (2.1412375659560114e-14, 0.0)),
    ((0.5, 0.0), (42.42640687119285, 42.42640687119285), (-5.0613015181507416e+16, -1.2753498634374032e+17), (2.40755655238535e-20, 5.575798200255265e-20)),
    ((0.5, 0.0), (-2.403430846640801, 1.7954164323118695), (2.553716112971587, 0.25545207512171286), (-7.966808508652044, -0.7685887816008026)),
    ((0.5, 0.0), (-9.899924966004454, -1.4112000805986722), (2447.7275560153457, -574.1328431751988), (-7689.762888158108, 1803.6915240675014)),
    ((0.5, 0.0), (0.0, 5.0), (-0.2419493023557157, -0.2419493023557157), (0.4924776837054444, 0.2676284671164477)),
    ((0.5, 0.0), (-4.0, 0.0), (0.0, 10.88710179858842), (0.0, -34.21431665390621)),
    ((0.5, 0.0), (0.03536860083385145, 0.4987474933020272), (0.39378236879890804, 0.3712689693366709), (0.5415056320823614, -1.6229031421411795)),
    ((0.5, 0.0), (23.883412228140152, -7.388005166533489), (1086722139.7213337, -1535238809.078309), (3.304148726880526e-12, 1.0106595870510954e-11)),
    ((0.5, 0.0), (-2.0, -0.001), (0.0016110321873578845, -2.046236178783867), (-0.004911284720451225, 6.548378217547637)),
    ((0.5, 0.0), (0.0015926534214665267, 1.9999993658636692), (0.3623487737206304, 0.3631664669623246), (-0.8291541005261549, -0.3088751964825246)),
    ((0.3, 0.2), (0.1, 0.0), (0.39202540959956383, -0.24971728823587216), (2.595140232965163, 0.5053750228763617)),
    ((0.3, 0.2), (1.5, 0.0), (1.5406719258864485, -0.12082215840446296), (0.21654655805968687, 0.006850309098971802)),
    ((0.3, 0.2), (2.5, 0.0), (3.224137245618349, -0.11428230223327211), (0.06287053018105511, 0.0012893679071451546)),
    ((0.3, 0.2), (7.0, 0.0), (167.93318897609947, -1.5634597465301463), (0.0004262073187444821, 3.4250512233197586e-06)),
    ((0.3, 0.2), (30.0, 0.0), (781008281261.9841, -1589030947.7313876), (2.1342225795117756e-14, 4.199713556476488e-17)),
    ((0.3, 0.2), (42.42640687119285, 42.42640687119285), (-5.087872562311976e+16, -1.27497604954683e+17), (2.3959665138806282e-20, 5.577619929682968e-20)),
    ((0.3, 0.2), (-2.403430846640801, 1.7954164323118695), (1.2471491407566762, -0.6954714973949663), (-8.302908634954782, -0.8942887121335339)),
    ((0.3, 0.2), (-9.899924966004454, -1.4112000805986722), (4400.19659346839, 1809.163654376222), (-7748.549884513804, 1881.6921929893526)),
    ((0.3, 0.2), (0.0, 5.0), (-0.18242599947979443, -0.14252161321798268), (0.4916472805396223, 0.2805528141314166)),
    ((0.3, 0.2), (-4.0, 0.0), (3.6029521086374023, 4.776246521864103), (-0.6201099840869316, -35.24249686489818)),
    ((0.3, 0.2), (0.03536860083385145, 0.4987474933020272), (0.5193152571456144, 0.11563522224538078), (0.7961905692517862, -1.514876643077257)),
    ((0.3, 0.2), (23.883412228140152, -7.388005166533489), (1090059663.48691, -1543563761.8364484), (3.278285631757435e-12, 1.0065474762780183e-11)),
    ((0.3, 0.2), (-2.0, -0.001), (2.260059837433155, -3.4602987670595566), (0.3792991512556182, 6.968829092277362)),
    ((0.3, 0.2), (0.0015926534214665267, 1.9999993658636692), (0.25417287512537284, 0.217778899715683), (-0.8264695128801748, -0.3574672965509038)),
    ((-0.7, 0.4), (0.1, 0.0), (4.85042486206897, -1.0823157552598162), (3.0018686776014376, -3.1021588090615584)),
    ((-0.7, 0.4), (1.5, 0.0), (1.4918011589330107, 0.44979801539283865), (0.23092948869521468, -0.034057304899729565)),
    ((-0.7, 0.4), (2.5, 0.0), (3.0032741661916047, 0.4702742920252064), (0.06568240876642346, -0.006280613644423331)),
    ((-0.7, 0.4), (7.0, 0.0), (164.16986200196982, 7.125601075508208), (0.0004339914807411054, -1.6271283566126594e-05)),
    ((-0.7, 0.4), (30.0, 0.0), (777275616330.9913, 7379830790.531671), (2.14395885203315e-14, -1.968765702785407e-16)),
    ((-0.7, 0.4), (42.42640687119285, 42.42640687119285), (-5.027500340826281e+16, -1.2809203898319883e+17), (2.4217679287196234e-20, 5.551183478261654e-20)),
    ((-0.7, 0.4), (-2.403430846640801, 1.7954164323118695), (-0.5747337415245791, 0.31119603366897675), (-7.259326154981933, -1.1673965765519192)),
    ((-0.7, 0.4), (-9.899924966004454, -1.4112000805986722), (-8039.519949651599, -3665.4537344309306), (-7741.897291907447, 1573.7506036320929)),
    ((-0.7, 0.4), (0.0, 5.0), (-0.04206479552912993, -0.1728479799009859), (0.46973217832542363, 0.24735002746096899)),
    ((-0.7, 0.4), (-4.0, 0.0), (-1.5893171762546736, -2.6184571441578752), (2.7742493374592208, -33.66050255024408)),
    ((-0.7, 0.4), (0.03536860083385145, 0.4987474933020272), (0.7282855527670395, -0.4061397076801321), (0.06839362586911395, -1.2496094644333418)),
    ((-0.7, 0.4), (23.883412228140152, -7.388005166533489), (1097126451.8776197, -1516256580.5865486), (3.4217120366983997e-12, 1.012021610913109e-11)),
    ((-0.7, 0.4), (-2.0, -0.001), (-5.481978988852278, 4.919772503680045), (-1.4033962337799943, 6.414342543364876)),
    ((-0.7, 0.4), (0.0015926534214665267, 1.9999993658636692), (0.04812911329679009, 0.32304915040662063), (-0.7432316249402453, -0.2385401724754948)),
    ((2.25, -1.0), (0.1, 0.0), (-0.0003475559980068722, -0.0004308141207483087), (-326.1637936600476, 167.5276673586712)),
    ((2.25, -1.0), (1.5, 0.0), (0.056610769267361666, 0.280633952323113), (0.29779210172859155, -0.5461395349324254)),
    ((2.25, -1.0), (2.5, 0.0), (0.7019957709672165, 0.9494276822437286), (0.09311413224198392, -0.08339788457889018)),
    ((2.25, -1.0), (7.0, 0.0), (115.857405177192, 41.208554417896856), (0.0005331313602859336, -0.00016395211293067924)),
    ((2.25, -1.0), (30.0, 0.0), (727519390026.8661, 55570262886.687584), (2.273196072937463e-14, -1.6793373821506037e-15)),
    ((2.25, -1.0), (42.42640687119285, 42.42640687119285), (-4.4466609998051944e+16, -1.3044045961905714e+17), (2.6662609625189646e-20, 5.431567805617473e-20)),
    ((2.25, -1.0), (-2.403430846640801, 1.7954164323118695), (17.684097462316036, -10.425301590761732), (-2.695425582909517, -0.6912329945703505)),
    ((2.25, -1.0), (-9.899924966004454, -1.4112000805986722), (62.995866151178234, 67.26611353068103), (-6696.2071793782425, -219.5154615225499)),
    ((2.25, -1.0), (0.0, 5.0), (-2.1183947168684125, 1.4870784623535893), (0.36872957006854196, 0.028395041024500547)),
    ((2.25, -1.0), (-4.0, 0.0), (25.700474990045333, 141.95734780877342), (11.160552607710112, -16.095409721452768)),
    ((2.25, -1.0), (0.03536860083385145, 0.4987474933020272), (0.08041645269286825, -0.042602472404507985), (1.3552185829224512, 1.8022638455993596)),
    ((2.25, -1.0), (23.883412228140152, -7.388005166533489), (1068263226.7444804, -1321112577.4978075), (4.332832711575743e-12, 1.0888000399679545e-11)),
    ((2.25, -1.0), (-2.0, -0.001), (0.025154023666968065, 0.008712410196063008), (4.35340566967421, 0.3251495355017087)),
    ((2.25, -1.0), (0.0015926534214665267, 1.9999993658636692), (-0.39483695242295985, -1.6391733391706047), (-0.2288818436010152, 0.26857057995842326)),
    ((1e-07, 0.0), (0.1, 0.0), (1.0025013202272144, 0.0), (2.4270690247020563, 0.0)),
    ((1e-07, 0.0), (1.5, 0.0), (1.646723168392327, 0.0), (0.2138055626475263, 0.0)),
    ((1e-07, 0.0), (2.5, 0.0), (3.289839137815359, 0.0), (0.06234755320036629, 0.0)),
    ((1e-07, 0.0), (7.0, 0.0), (168.59390851024708, 0.0), (0.0004247957418692321, 0.0)),
    ((1e-07, 0.0), (30.0, 0.0), (781672297823.9774, 0.0), (2.1324774964630566e-14, 0.0)),
    ((1e-07, 0.0), (42.42640687119285, 42.42640687119285), (-5.087796085784335e+16, -1.2764727074061405e+17), (2.3959040835415005e-20, 5.571085783517693e-20)),
    ((1e-07, 0.0), (-2.403430846640801, 1.7954164323118695), (0.3580755351493509, -2.6005118343644202), (-8.201558078590454, -1.0700661748977756)),
    ((1e-07, 0.0), (-9.899924966004454, -1.4112000805986722), (586.5636684953535, 2478.7146516778175), (-7787.11231719667, 1842.7416458410182)),
    ((1e-07, 0.0), (0.0, 5.0), (-0.1775968197761689, -2.789684321548636e-08), (0.48461835249266705, 0.2789683560311954)),
    ((1e-07, 0.0), (-4.0, 0.0), (11.301921951019787, 3.5506034972770156e-06), (0.011159676085852487, -35.50603497627666)),
    ((1e-07, 0.0), (0.03536860083385145, 0.4987474933020272), (0.9390569073530729, 0.008550053817484745), (0.7121165543311484, -1.393252119329298)),
    ((1e-07, 0.0), (23.883412228140152, -7.388005166533489), (1094389329.1210485, -1541040257.3009744), (3.302989499500365e-12, 1.0054546209036022e-11)),
    ((1e-07, 0.0), (-2.0, -0.001), (2.2795845493128946, 0.0015899205083228915), (0.10889664843157112, 7.161386241732075)),
    ((1e-07, 0.0), (0.0015926534214665267, 1.9999993658636692), (0.22389114312155128, 0.0009185582149237566), (-0.8002544359839877, -0.3514194921437581)),
    ((3.000000001, 0.0), (0.1, 0.0), (2.0846357333688308e-05, 0.0), (7990.012461779415, 0.0)),
    ((3.000000001, 0.0), (1.5, 0.0), (0.08077411288866004, 0.0), (1.8338037048883906, 0.0)),
    ((3.000000001, 0.0), (2.5, 0.0), (0.4743704082461533, 0.0), (0.2682271466420586, 0.0)),
    ((3.000000001, 0.0), (7.0, 0.0), (85.17548680487154, 0.0), (0.0007710751538700817, 0.0)),
    ((3.000000001, 0.0), (30.0, 0.0), (671140461729.2878, 0.0), (2.4713310639017758e-14, 0.0)),
    ((3.000000001, 0.0), (42.42640687119285, 42.42640687119285), (-4.1688427368545256e+16, -1.2346709036063651e+17), (2.830647364076555e-20, 5.73412710700832e-20)),
    ((3.000000001, 0.0), (-2.403430846640801, 1.7954164323118695), (0.5180519930733489, 0.43338399615906165), (-1.1822715939450477, 1.5551108818631079)),
    ((3.000000001, 0.0), (-9.899924966004454, -1.4112000805986722), (-260.0627126203572, -1577.6660531475413), (-4956.3840859529, 817.0111218693235)),
    ((3.000000001, 0.0), (0.0, 5.0), (5.730756046279321e-10, -0.3648312307813768), (0.5730755568505481, -0.22975592226042038)),
    ((3.000000001, 0.0), (-4.0, 0.0), (-3.3372757758806464, -1.048436192798974e-08), (-0.029884924435883014, -10.48436106041593)),
    ((3.000000001, 0.0), (0.03536860083385145, 0.4987474933020272), (-0.0005349631733315144, -0.0025077070353429773), (-13.623308353615965, 64.6227626907097)),
    ((3.000000001, 0.0), (23.883412228140152, -7.388005166533489), (846064375.7302831, -1342471247.297044), (3.2974375696526707e-12, 1.2089601392391151e-11)),
    ((3.000000001, 0.0), (-2.0, -0.001), (-0.212739705718565, -0.0003698377463514284), (-0.6485459150936125, 0.669566331233771)),
    ((3.000000001, 0.0), (0.0015926534214665267, 1.9999993658636692), (-0.0002538992384616474, -0.1289430449024367), (0.19985573456792669, 1.771116982220196)),
    ((0.5, 1.0), (0.1, 0.0), (-0.38461275765251174, 0.0027113676394642234), (-0.47760640946630467, 1.0375070132800799)),
    ((0.5, 1.0), (1.5, 0.0), (1.5937116177124697, -1.081421908250337), (0.1693997972606536, 0.046795515246611345)),
    ((0.5, 1.0), (2.5, 0.0), (3.692179367936227, -1.134180072250471), (0.05405661601488096, 0.009431549652291512)),
    ((0.5, 1.0), (7.0, 0.0), (178.1354515757519, -13.910077210219688), (0.00040309086870450627, 2.7088615574378657e-05)),
    ((0.5, 1.0), (30.0, 0.0), (791561320914.3871, -13424289892.903898), (2.1061291915026022e-14, 3.4544708076387004e-16)),
    ((0.5, 1.0), (42.42640687119285, 42.42640687119285), (-5.211753289646645e+16, -1.2691700122158694e+17), (2.341911652367885e-20, 5.603241912900511e-20)),
    ((0.5, 1.0), (-2.403430846640801, 1.7954164323118695), (0.15706999784681655, 0.024267303918297203), (-10.395039379330399, -1.0782755664824533)),
    ((0.5, 1.0), (-9.899924966004454, -1.4112000805986722), (58261.456342127494, -17420.762532560475), (-7909.60608299603, 2365.0519223185634)),
    ((0.5, 1.0), (0.0, 5.0), (-0.09567076683543739, -0.13825963712831033), (0.5034668758164972, 0.3482703367974551)),
    ((0.5, 1.0), (-4.0, 0.0), (0.08267130465091986, 0.5376680703280122), (-5.983320160241788, -39.32361149735352)),
    ((0.5, 1.0), (0.03536860083385145, 0.4987474933020272), (0.13474087745832378, -0.12938166104827023), (2.0943271203434417, -0.7901540778915159)),
    ((0.5, 1.0), (23.883412228140152, -7.388005166533489), (1093855719.4282339, -1589740637.2961757), (3.0948276004107015e-12, 9.903498339404071e-12)),
    ((0.5, 1.0), (-2.0, -0.001), (-24.929433948447606, -57.428465689825394), (3.3835577299069843, 7.8006444467944895)),
    ((0.5, 1.0), (0.0015926534214665267, 1.9999993658636692), (0.12222949359144575, 0.19242169098947515), (-0.8527859485386164, -0.6220085476356116)),
    ((-3.0, 0.0), (0.1, 0.0), (2.0846357422327155e-05, 0.0), (7990.012430465435, 0.0)),
    ((-3.0, 0.0), (1.5, 0.0), (0.0807741130160923, 0.0), (1.8338037024745792, 0.0)),
    ((-3.0, 0.0), (2.5, 0.0), (0.4743704087780356, 0.0), (0.2682271463934492, 0.0)),
    ((-3.0, 0.0), (7.0, 0.0), (85.17548684284387, 0.0), (0.0007710751535668902, 0.0)),
    ((-3.0, 0.0), (30.0, 0.0), (671140461797.4396, 0.0), (2.471331063658993e-14, 0.0)),
    ((-3.0, 0.0), (42.42640687119285, 42.42640687119285), (-4.1688427374435096e+16, -1.2346709036351211e+17), (2.830647363776163e-20, 5.734127106904411e-20)),
    ((-3.0, 0.0), (-2.403430846640801, 1.7954164323118695), (0.5180519946782863, 0.4333839951938267), (-1.1822715959594814, 1.5551108831715303)),
    ((-3.0, 0.0), (-9.899924966004454, -1.4112000805986722), (-260.0627078145194, -1577.6660544384874), (-4956.384087441811, 817.0111223422798)),
    ((-3.0, 0.0), (0.0, 5.0), (6.126784499308285e-51, -0.364831230613667), (0.5730755569480099, -0.22975592188917873)),
    ((-3.0, 0.0), (-4.0, 0.0), (-3.337275778420344, -1.120889210868824e-49), (-0.029884924416755672, -10.484361068488512)),
    ((-3.0, 0.0), (0.03536860083385145, 0.4987474933020272), (-0.0005349631785031964, -0.002507707041157487), (-13.623308419136373, 64.62276252215186)),
    ((-3.0, 0.0), (23.883412228140152, -7.388005166533489), (846064375.8780429, -1342471247.4224324), (3.2974375696924226e-12, 1.2089601390918332e-11)),
    ((-3.0, 0.0), (-2.0, -0.001), (-0.21273970599707023, -0.0003698384150844533), (-0.6485459143866641, 0.6695663341446113)),
    ((-3.0, 0.0), (0.0015926534214665267, 1.9999993658636692), (-0.0002538994411891788, -0.12894304505532747), (0.19985573202996657, 1.7711169813104632)),];
