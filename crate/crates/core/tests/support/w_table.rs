// (re z, im z, re w, im w) from 40-digit evaluation of exp(-z^2) erfc(-iz)
pub const W_TABLE: &[(f64, f64, f64, f64)] = &[
    (1e-06, 0.0, 0.999999999999, 1.1283791670947603e-06),
    (9.659258262890682e-07, 2.5881904510252075e-07, 0.9999997079531154, 1.0899300793435717e-06),
    (8.660254037844387e-07, 4.999999999999999e-07, 0.9999994358099165, 9.772041577804361e-07),
    (7.071067811865476e-07, 7.071067811865475e-07, 0.9999992021154392, 7.978835608033973e-07),
    (5.000000000000001e-07, 8.660254037844386e-07, 0.9999990227954761, 5.641887175231049e-07),
    (2.5881904510252096e-07, 9.659258262890682e-07, 0.9999989100702866, 2.9204551854177044e-07),
    (6.123233995736766e-23, 1e-06, 0.9999988716218329, 6.909317429586207e-23),
    (-2.588190451025206e-07, 9.659258262890682e-07, 0.9999989100702866, -2.9204551854177e-07),
    (-4.999999999999998e-07, 8.660254037844387e-07, 0.9999990227954761, -5.641887175231044e-07),
    (-7.071067811865475e-07, 7.071067811865476e-07, 0.9999992021154392, -7.978835608033972e-07),
    (-8.660254037844385e-07, 5.000000000000003e-07, 0.9999994358099165, -9.77204157780436e-07),
    (-9.659258262890682e-07, 2.58819045102521e-07, 0.9999997079531154, -1.0899300793435717e-06),
    (-1e-06, 1.2246467991473532e-22, 0.999999999999, -1.1283791670947603e-06),
    (0.05, 0.0, 0.9975031223974601, 0.0563250207219868),
    (0.04829629131445342, 0.012940952255126037, 0.983300597680033, 0.053182766668293115),
    (0.04330127018922194, 0.024999999999999998, 0.9706329454738786, 0.046697812633223854),
    (0.03535533905932738, 0.035355339059327376, 0.9601692037844118, 0.037460654486529237),
    (0.02500000000000001, 0.04330127018922193, 0.9523882651966469, 0.026135787919386703),
    (0.012940952255126049, 0.04829629131445341, 0.9476035823416163, 0.013416173264616874),
    (3.061616997868383e-18, 0.05, 0.9459900435549615, 3.1650389183039776e-18),
    (-0.012940952255126032, 0.04829629131445342, 0.9476035823416163, -0.013416173264616854),
    (-0.02499999999999999, 0.04330127018922194, 0.9523882651966469, -0.026135787919386685),
    (-0.035355339059327376, 0.03535533905932738, 0.9601692037844118, -0.03746065448652923),
    (-0.043301270189221926, 0.02500000000000002, 0.9706329454738786, -0.04669781263322384),
    (-0.04829629131445341, 0.01294095225512605, 0.983300597680033, -0.05318276666829311),
    (-0.05, 6.123233995736766e-18, 0.9975031223974601, -0.0563250207219868),
    (0.3, 0.0, 0.9139311852712282, 0.31891568277156584),
    (0.2897777478867205, 0.07764571353075622, 0.8501411272568268, 0.271199349594469),
    (0.2598076211353316, 0.14999999999999997, 0.8037744362595259, 0.21810734771342144),
    (0.21213203435596426, 0.21213203435596423, 0.7714527595344226, 0.16331868709631736),
    (0.15000000000000002, 0.25980762113533157, 0.7503401578101708, 0.10847623571592463),
    (0.07764571353075629, 0.28977774788672045, 0.7384406726351281, 0.05406913651914945),
    (1.8369701987210297e-17, 0.3, 0.7345993345676551, 1.2631366514514648e-17),
    (-0.07764571353075618, 0.2897777478867205, 0.738440672635128, -0.054069136519149366),
    (-0.14999999999999994, 0.2598076211353316, 0.7503401578101708, -0.10847623571592456),
    (-0.21213203435596423, 0.21213203435596426, 0.7714527595344226, -0.16331868709631733),
    (-0.2598076211353315, 0.1500000000000001, 0.8037744362595259, -0.2181073477134213),
    (-0.28977774788672045, 0.0776457135307563, 0.8501411272568267, -0.2711993495944689),
    (-0.3, 3.6739403974420595e-17, 0.9139311852712282, -0.31891568277156584),
    (0.9, 0.0, 0.4448580662229411, 0.6101420563926694),
    (0.8693332436601615, 0.23293714059226867, 0.4438364570319865, 0.45011852409866876),
    (0.7794228634059949, 0.44999999999999996, 0.44751994212458496, 0.3299603301170499),
    (0.6363961030678928, 0.6363961030678927, 0.4513579151329273, 0.2327656372365891),
    (0.4500000000000001, 0.7794228634059948, 0.4542392234548837, 0.14900507597148213),
    (0.23293714059226886, 0.8693332436601614, 0.45596232299033107, 0.07279388984946258),
    (5.5109105961630896e-17, 0.9, 0.456531651323117, 1.689767501867624e-17),
    (-0.23293714059226858, 0.8693332436601615, 0.45596232299033107, -0.07279388984946249),
    (-0.4499999999999998, 0.7794228634059949, 0.4542392234548837, -0.14900507597148202),
    (-0.6363961030678927, 0.6363961030678928, 0.4513579151329273, -0.23276563723658902),
    (-0.7794228634059946, 0.4500000000000003, 0.44751994212458496, -0.3299603301170497),
    (-0.8693332436601614, 0.23293714059226892, 0.4438364570319865, -0.4501185240986686),
    (-0.9, 1.1021821192326179e-16, 0.4448580662229411, -0.6101420563926693),
    (1.7, 0.0, 0.05557621261148308, 0.4203882078890175),
    (1.6420739046914161, 0.43999237667428526, 0.15704313274418316, 0.3375609172225284),
    (1.4722431864335457, 0.8499999999999999, 0.21679813173709694, 0.2604832975893786),
    (1.2020815280171309, 1.2020815280171306, 0.25353458410582125, 0.18968963602786063),
    (0.8500000000000002, 1.4722431864335457, 0.2758077778412592, 0.12379373072530042),
    (0.43999237667428565, 1.642073904691416, 0.2878484491396873, 0.061109965541858775),
    (1.0409497792752501e-16, 1.7, 0.2916632970753435, 1.4232277290174473e-17),
    (-0.43999237667428504, 1.6420739046914161, 0.2878484491396873, -0.061109965541858685),
    (-0.8499999999999996, 1.4722431864335457, 0.27580777784125926, -0.12379373072530037),
    (-1.2020815280171306, 1.2020815280171309, 0.25353458410582125, -0.18968963602786057),
    (-1.4722431864335455, 0.8500000000000005, 0.21679813173709697, -0.2604832975893785),
    (-1.642073904691416, 0.4399923766742857, 0.15704313274418327, -0.3375609172225283),
    (-1.7, 2.0818995585505003e-16, 0.05557621261148314, -0.42038820788901743),
    (2.6, 0.0, 0.0011592291739045907, 0.23940270617946696),
    (2.511407148351578, 0.6729295172665539, 0.07227845211389254, 0.22050364249539692),
    (2.2516660498395407, 1.2999999999999998, 0.12511116079162315, 0.18413758666858251),
    (1.8384776310850237, 1.8384776310850235, 0.16187760459285783, 0.14064222709912189),
    (1.3000000000000003, 2.25166604983954, 0.1858090721344134, 0.09444365614522297),
    (0.6729295172665545, 2.5114071483515774, 0.19927072141166524, 0.04734127027004635),
    (1.5920408388915593e-16, 2.6, 0.20361324735670921, 1.1079056908820726e-17),
    (-0.6729295172665537, 2.511407148351578, 0.19927072141166524, -0.04734127027004629),
    (-1.2999999999999994, 2.2516660498395407, 0.18580907213441342, -0.0944436561452229),
    (-1.8384776310850235, 1.8384776310850237, 0.16187760459285785, -0.14064222709912189),
    (-2.25166604983954, 1.300000000000001, 0.1251111607916232, -0.18413758666858243),
    (-2.5114071483515774, 0.6729295172665547, 0.07227845211389264, -0.2205036424953969),
    (-2.6, 3.1840816777831187e-16, 0.0011592291739046278, -0.23940270617946696),
    (3.8, 0.0, 5.355347802793113e-07, 0.15427337823750728),
    (3.6705181398984594, 0.9835123713895788, 0.0426826355169888, 0.14713574628011664),
    (3.290896534380867, 1.8999999999999997, 0.07957378569832624, 0.12804472304959763),
    (2.6870057685088806, 2.68700576850888, 0.10819558881660664, 0.10104738015821664),
    (1.9000000000000004, 3.2908965343808667, 0.12819316156563326, 0.06938931672810159),
    (0.9835123713895796, 3.670518139898459, 0.13992785865680543, 0.035232256395638754),
    (2.326828918379971e-16, 3.8, 0.14378884489407462, 8.27977543514575e-18),
    (-0.9835123713895784, 3.6705181398984594, 0.13992785865680543, -0.035232256395638706),
    (-1.899999999999999, 3.290896534380867, 0.1281931615656333, -0.06938931672810154),
    (-2.68700576850888, 2.6870057685088806, 0.10819558881660665, -0.10104738015821663),
    (-3.2908965343808663, 1.9000000000000012, 0.0795737856983263, -0.12804472304959758),
    (-3.670518139898459, 0.9835123713895798, 0.04268263551698885, -0.1471357462801166),
    (-3.8, 4.653657836759942e-16, 5.355347802998333e-07, -0.15427337823750728),
    (5.5, 0.0, 7.287724095819692e-14, 0.1043674364367812),
    (5.312592044589875, 1.423504748063864, 0.02783707502454005, 0.1003027768032505),
    (4.763139720814413, 2.7499999999999996, 0.05302321404228387, 0.08875811188462691),
    (3.8890872965260117, 3.889087296526011, 0.07367015624795198, 0.07128196996729241),
    (2.7500000000000004, 4.763139720814412, 0.08876994029844233, 0.04963920121089654),
    (1.4235047480638654, 5.312592044589875, 0.09790876106863346, 0.02542574708074327),
    (3.3677786976552215e-16, 5.5, 0.10096221839949909, 5.992882948989101e-18),
    (-1.4235047480638634, 5.312592044589875, 0.09790876106863348, -0.02542574708074324),
    (-2.7499999999999987, 4.763139720814413, 0.08876994029844236, -0.04963920121089651),
    (-3.889087296526011, 3.8890872965260117, 0.073670156247952, -0.0712819699672924),
    (-4.7631397208144115, 2.7500000000000018, 0.05302321404228392, -0.0887581118846269),
    (-5.312592044589875, 1.4235047480638656, 0.027837075024540078, -0.10030277680325049),
    (-5.5, 6.735557395310443e-16, 7.289048483798597e-14, -0.1043674364367812),
    (6.5, 0.0, 4.4777324417183015e-19, 0.08786442473104566),
    (6.278517870878944, 1.6823237931663848, 0.02322885913117932, 0.08457588666161754),
    (5.629165124598852, 3.2499999999999996, 0.04444336743262132, 0.07513618421185633),
    (4.59619407771256, 4.596194077712559, 0.06207490031788553, 0.060625245525938495),
    (3.250000000000001, 5.629165124598851, 0.07513988886197238, 0.042391143691432966),
    (1.6823237931663861, 6.278517870878943, 0.08312436086038814, 0.021772000955149407),
    (3.9801020972288977e-16, 6.5, 0.08580567010489461, 5.1365031424161234e-18),
    (-1.6823237931663841, 6.278517870878944, 0.08312436086038814, -0.02177200095514938),
    (-3.2499999999999987, 5.629165124598852, 0.07513988886197241, -0.04239114369143294),
    (-4.596194077712559, 4.59619407771256, 0.06207490031788554, -0.06062524552593848),
    (-5.62916512459885, 3.250000000000002, 0.04444336743262135, -0.07513618421185632),
    (-6.278517870878943, 1.6823237931663866, 0.023228859131179346, -0.08457588666161754),
    (-6.5, 7.960204194457795e-16, 1.147930633292076e-17, -0.08786442473104566),
    (7.5, 0.0, 3.7233631217505106e-25, 0.07591262430924288),
    (7.244443697168013, 1.9411428382689055, 0.019960579888331227, 0.07313922995456483),
    (6.49519052838329, 3.7499999999999996, 0.038289776335792225, 0.06513087675701551),
    (5.303300858899107, 5.303300858899106, 0.05365199296600153, 0.052707467247617795),
    (3.750000000000001, 6.495190528383289, 0.06513224257044455, 0.036953234417085104),
    (1.9411428382689073, 7.244443697168012, 0.07219400690354161, 0.019013405963981912),
    (4.592425496802575e-16, 7.5, 0.07457369306287669, 4.4885315840022245e-18),
    (-1.9411428382689047, 7.244443697168013, 0.07219400690354162, -0.019013405963981884),
    (-3.7499999999999982, 6.49519052838329, 0.06513224257044457, -0.03695323441708508),
    (-5.303300858899106, 5.303300858899107, 0.05365199296600154, -0.05270746724761778),
    (-6.495190528383288, 3.7500000000000027, 0.03828977633579226, -0.0651308767570155),
    (-7.244443697168012, 1.9411428382689075, 0.019960579888331248, -0.07313922995456483),
    (-7.5, 9.18485099360515e-16, 9.469763187165189e-18, -0.07591262430924288),
    (7.99, 0.0, 1.881901315532503e-28, 0.07117853378779461),
    (7.717747352049656, 2.067964170369141, 0.018679840726775702, 0.06860018497159287),
    (6.919542976237666, 3.9949999999999997, 0.03586523307311902, 0.061140061459454234),
    (5.649783181680515, 5.649783181680514, 0.05031172731867098, 0.049530330797267715),
    (3.995000000000001, 6.919542976237665, 0.061140939426369494, 0.03475966848557706),
    (2.0679641703691427, 7.717747352049655, 0.06781833879843163, 0.017896743288410424),
    (4.892463962593676e-16, 7.99, 0.07007143671795267, 4.225918753930982e-18),
    (-2.06796417036914, 7.717747352049656, 0.06781833879843163, -0.0178967432884104),
    (-3.9949999999999983, 6.919542976237666, 0.061140939426369514, -0.03475966848557704),
    (-5.649783181680514, 5.649783181680515, 0.050311727318670986, -0.04953033079726771),
    (-6.919542976237664, 3.9950000000000028, 0.03586523307311905, -0.06114006145945422),
    (-7.717747352049655, 2.067964170369143, 0.018679840726775723, -0.06860018497159286),
    (-7.99, 9.784927925187352e-16, 8.859080817600205e-18, -0.07117853378779461),
    (8.01, 0.0, 1.3665408281416485e-28, 0.07099792107251386),
    (7.737065868575437, 2.073140551271191, 0.018631121614239233, 0.06842692209962237),
    (6.936863484313354, 4.004999999999999, 0.03577287039243917, 0.060987520321859445),
    (5.663925317304246, 5.663925317304245, 0.05018425561470195, 0.04940869059524136),
    (4.005000000000001, 6.936863484313353, 0.06098838309129356, 0.03467556146411006),
    (2.0731405512711927, 7.737065868575436, 0.06765091516451793, 0.017853885167673587),
    (4.90471043058515e-16, 8.01, 0.06989910630474705, 4.215836048914641e-18),
    (-2.07314055127119, 7.737065868575437, 0.06765091516451793, -0.017853885167673562),
    (-4.004999999999998, 6.936863484313354, 0.060988383091293584, -0.03467556146411004),
    (-5.663925317304245, 5.663925317304246, 0.05018425561470196, -0.049408690595241354),
    (-6.936863484313352, 4.005000000000003, 0.0357728703924392, -0.060987520321859424),
    (-7.737065868575436, 2.073140551271193, 0.018631121614239254, -0.06842692209962235),
    (-8.01, 9.8094208611703e-16, 8.835863784108415e-18, -0.07099792107251386),
    (9.5, 0.0, 6.381503448060791e-40, 0.059723024865877966),
    (9.176295349746148, 2.458780928473947, 0.015608929112055595, 0.05759879234453177),
    (8.227241335952169, 4.749999999999999, 0.030025862586863034, 0.051426976579116455),
    (6.7175144212722016, 6.717514421272201, 0.04222260799227324, 0.04175751516784017),
    (4.750000000000001, 8.227241335952167, 0.05142723844634511, 0.02936797139840734),
    (2.4587809284739492, 9.176295349746148, 0.05713356468516565, 0.01514332968154933),
    (5.817072295949927e-16, 9.5, 0.05906467835256389, 3.5776614074396745e-18),
    (-2.458780928473946, 9.176295349746148, 0.05713356468516566, -0.015143329681549312),
    (-4.749999999999998, 8.227241335952169, 0.051427238446345114, -0.029367971398407324),
    (-6.717514421272201, 6.7175144212722016, 0.042222607992273245, -0.04175751516784016),
    (-8.227241335952165, 4.7500000000000036, 0.030025862586863065, -0.05142697657911644),
    (-9.176295349746148, 2.4587809284739497, 0.015608929112055608, -0.05759879234453175),
    (-9.5, 1.1634144591899855e-15, 7.397344387311917e-18, -0.059723024865877966),
    (13.0, 0.0, 4.020060215743355e-74, 0.0435287555930438),
    (12.557035741757888, 3.3646475863327696, 0.011324449028606635, 0.04201148974821843),
    (11.258330249197703, 6.499999999999999, 0.021828560402990367, 0.03758380705474108),
    (9.19238815542512, 9.192388155425117, 0.030777842712946736, 0.030596281525437672),
    (6.500000000000002, 11.258330249197702, 0.03758383623868212, 0.02157177727840528),
    (3.3646475863327723, 12.557035741757886, 0.04182991347676213, 0.011142831439280782),
    (7.960204194457795e-16, 13.0, 0.043271921864609694, 2.6341896700675157e-18),
    (-3.3646475863327683, 12.557035741757888, 0.04182991347676213, -0.011142831439280767),
    (-6.499999999999997, 11.258330249197703, 0.037583836238682125, -0.021571777278405264),
    (-9.192388155425117, 9.19238815542512, 0.030777842712946743, -0.030596281525437665),
    (-11.2583302491977, 6.500000000000004, 0.021828560402990388, -0.03758380705474107),
    (-12.557035741757886, 3.364647586332773, 0.011324449028606649, -0.042011489748218424),
    (-13.0, 1.592040838891559e-15, 5.362755056133903e-18, -0.0435287555930438),
    (27.0, 0.0, 2.507972e-317, 0.020910271993100873),
    (26.079997309804845, 6.98811421776806, 0.00541842236914336, 0.02019404140723237),
    (23.382685902179844, 13.499999999999998, 0.010462301844792628, 0.018096363703497386),
    (19.091883092036785, 19.09188309203678, 0.01478575327529715, 0.014765485050665043),
    (13.500000000000004, 23.38268590217984, 0.018096363878654483, 0.010433638145511676),
    (6.988114217768066, 26.079997309804842, 0.020173773091939615, 0.005398153806126385),
    (1.6532731788489269e-15, 27.0, 0.02088160799042094, 1.2768817536819632e-18),
    (-6.988114217768057, 26.079997309804845, 0.020173773091939615, -0.005398153806126378),
    (-13.499999999999995, 23.382685902179844, 0.018096363878654487, -0.01043363814551167),
    (-19.09188309203678, 19.091883092036785, 0.014785753275297152, -0.014765485050665042),
    (-23.38268590217984, 13.500000000000009, 0.010462301844792635, -0.01809636370349738),
    (-26.079997309804842, 6.988114217768067, 0.005418422369143367, -0.02019404140723237),
    (-27.0, 3.3065463576978537e-15, 2.564294590188439e-18, -0.020910271993100873),
    (60.0, 0.0, 0.0, 0.009404466264744895),
    (57.9555495773441, 15.529142706151244, 0.002434640824665576, 0.009083678446110487),
    (51.96152422706632, 29.999999999999996, 0.004702886129197183, 0.008143374726794597),
    (42.42640687119285, 42.426406871192846, 0.006649961099142232, 0.006648114144674794),
    (30.000000000000007, 51.96152422706631, 0.008143374727449124, 0.004700274140762357),
    (15.529142706151259, 57.955549577344094, 0.00908183149130424, 0.0024327938689336884),
    (3.67394039744206e-15, 60.0, 0.009401854275176388, 5.755377321634527e-19),
    (-15.529142706151237, 57.9555495773441, 0.00908183149130424, -0.002432793868933685),
    (-29.999999999999986, 51.96152422706632, 0.008143374727449125, -0.004700274140762354),
    (-42.426406871192846, 42.42640687119285, 0.006649961099142233, -0.006648114144674792),
    (-51.961524227066306, 30.00000000000002, 0.0047028861291971875, -0.008143374726794595),
    (-57.955549577344094, 15.52914270615126, 0.0024346408246655785, -0.009083678446110487),
    (-60.0, 7.34788079488412e-15, 1.1520350940964768e-18, -0.009404466264744895),
    (250.0, 0.0, 0.0, 0.0022567763886910137),
    (241.4814565722671, 64.70476127563019, 0.0005841048036539994, 0.002179873924953321),
    (216.50635094610968, 124.99999999999999, 0.001128397221378826, 0.001954410047236418),
    (176.7766952966369, 176.77669529663686, 0.0015957818874523036, 0.0015957563551463826),
    (125.00000000000003, 216.50635094610965, 0.001954410047236448, 0.0011283611132454968),
    (64.70476127563025, 241.48145657226706, 0.0021798483926473845, 0.0005840792713480208),
    (1.5308084989341916e-14, 250.0, 0.002256740280557632, 1.381832771752148e-19),
    (-64.70476127563016, 241.4814565722671, 0.0021798483926473845, -0.00058407927134802),
    (-124.99999999999994, 216.50635094610968, 0.0019544100472364484, -0.0011283611132454961),
    (-176.77669529663686, 176.7766952966369, 0.0015957818874523038, -0.0015957563551463824),
    (-216.50635094610962, 125.00000000000009, 0.001128397221378827, -0.0019544100472364176),
    (-241.48145657226706, 64.70476127563026, 0.0005841048036540001, -0.002179873924953321),
    (-250.0, 3.061616997868383e-14, 2.763798202634373e-19, -0.0022567763886910137),
    (4000.0, 0.0, 0.0, 0.0001410474002946706),
    (3863.7033051562735, 1035.276180410083, 3.650575543439174e-05, 0.00013624132553474963),
    (3464.101615137755, 1999.9999999999998, 7.052370235120086e-05, 0.00012215062797572962),
    (2828.42712474619, 2828.4271247461897, 9.973557321709444e-05, 9.973556698362133e-05),
    (2000.0000000000005, 3464.1016151377544, 0.00012215062797572962, 7.052369353573863e-05),
    (1035.276180410084, 3863.703305156273, 0.00013624131930127647, 3.650574920091865e-05),
    (2.4492935982947065e-13, 4000.0, 0.00014104739147920836, 8.63666128536353e-21),
    (-1035.2761804100826, 3863.7033051562735, 0.0001362413193012765, -3.65057492009186e-05),
    (-1999.999999999999, 3464.101615137755, 0.00012215062797572965, -7.052369353573859e-05),
    (-2828.4271247461897, 2828.42712474619, 9.973557321709446e-05, -9.973556698362131e-05),
    (-3464.101615137754, 2000.0000000000014, 7.052370235120091e-05, -0.0001221506279757296),
    (-3863.703305156273, 1035.2761804100842, 3.650575543439179e-05, -0.0001362413255347496),
    (-4000.0, 4.898587196589413e-13, 1.7273325809475345e-20, -0.0001410474002946706),
    (6.2, 1e-12, 1.5311200689979158e-14, 0.09223146376024231),
    (-6.2, 1e-12, 1.5311200689979158e-14, -0.09223146376024231),
    (6.2, 1e-06, 1.5290983551708924e-08, 0.09223146376023975),
    (-6.2, 1e-06, 1.5290983551708924e-08, -0.09223146376023975),
    (6.2, 0.001, 1.5290983091947032e-05, 0.09223146118760826),
    (-6.2, 0.001, 1.5290983091947032e-05, -0.09223146118760826),
    (6.2, 0.05, 0.0007644942351132949, 0.0922250326519649),
    (-6.2, 0.05, 0.0007644942351132949, -0.0922250326519649),
    (7.0, 1e-12, 1.1885946338817538e-14, 0.08144750806500296),
    (-7.0, 1e-12, 1.1885946338817538e-14, -0.08144750806500296),
    (7.0, 1e-06, 1.1885945814529235e-08, 0.08144750806500121),
    (-7.0, 1e-06, 1.1885945814529235e-08, -0.08144750806500121),
    (7.0, 0.001, 1.1885945552633884e-05, 0.08144750631089037),
    (-7.0, 0.001, 1.1885945552633884e-05, -0.08144750631089037),
    (7.0, 0.05, 0.000594264555732032, 0.08144312303074976),
    (-7.0, 0.05, 0.000594264555732032, -0.08144312303074976),
    (7.9, 1e-12, 9.266555368259271e-15, 0.07200289382682094),
    (-7.9, 1e-12, 9.266555368259271e-15, -0.07200289382682094),
    (7.9, 1e-06, 9.266555368258327e-09, 0.07200289382681975),
    (-7.9, 1e-06, 9.266555368258327e-09, -0.07200289382681975),
    (7.9, 0.001, 9.266555210722533e-06, 0.0720028926239274),
    (-7.9, 0.001, 9.266555210722533e-06, -0.0720028926239274),
    (7.9, 0.05, 0.00046330807728646353, 0.0719998867229855),
    (-7.9, 0.05, 0.00046330807728646353, -0.0719998867229855),
    (8.2, 1e-12, 8.585212625576319e-15, 0.06932709632445665),
    (-8.2, 1e-12, 8.585212625576319e-15, -0.06932709632445665),
    (8.2, 1e-06, 8.585212625576177e-09, 0.06932709632445558),
    (-8.2, 1e-06, 8.585212625576177e-09, -0.06932709632445558),
    (8.2, 0.001, 8.585212490713344e-06, 0.06932709525280946),
    (-8.2, 0.001, 8.585212490713344e-06, -0.06932709525280946),
    (8.2, 0.05, 0.0004292437740918923, 0.06932441731340519),
    (-8.2, 0.05, 0.0004292437740918923, -0.06932441731340519),
    (10.0, 1e-12, 5.728717562239308e-15, 0.0567053942328876),
    (-10.0, 1e-12, 5.728717562239308e-15, -0.0567053942328876),
    (10.0, 1e-06, 5.728717562239248e-09, 0.056705394232887014),
    (-10.0, 1e-06, 5.728717562239248e-09, -0.056705394232887014),
    (10.0, 0.001, 5.7287175028417535e-06, 0.05670539365110621),
    (-10.0, 0.001, 5.7287175028417535e-06, -0.05670539365110621),
    (10.0, 0.05, 0.000286428453614216, 0.05670393981751957),
    (-10.0, 0.05, 0.000286428453614216, -0.05670393981751957),
    (20.0, 1e-12, 1.4157965867555475e-15, 0.028244874092056702),
    (-20.0, 1e-12, 1.4157965867555475e-15, -0.028244874092056702),
    (20.0, 1e-06, 1.4157965867555438e-09, 0.028244874092056633),
    (-20.0, 1e-06, 1.4157965867555438e-09, -0.028244874092056633),
    (20.0, 0.001, 1.4157965831846981e-06, 0.02824487402099906),
    (-20.0, 0.001, 1.4157965831846981e-06, -0.02824487402099906),
    (20.0, 0.05, 7.078938298441206e-05, 0.028244696449072022),
    (-20.0, 0.05, 7.078938298441206e-05, -0.028244696449072022),
    (0.5, -0.5, 1.2220084158685705, 1.1893393085928645),
    (1.2, -2.0, 2.0588154431201606, -25.666995894899785),
    (-3.0, -1.0, -0.06467357479385968, -0.17373084850174397),
    (2.0, -2.0, -0.4389528271292429, 2.1098962103309815),
    (-4.0, -4.0, 1.5968762875866551, -1.1722278810971525),
    (5.0, -0.3, -0.007193662413763989, 0.11478396551577814),
    (0.0, -1.5, 18.653886256262734, 0.0),
    (-1.0, -3.0, 5724.2903086847155, 1665.8015249835282),
];
