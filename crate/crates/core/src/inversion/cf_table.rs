// Generated by tools/gen_cf_table.py. Do not edit by hand.
#![allow(clippy::excessive_precision)]

/// `(pole, residue)` pairs in the upper half-plane, as `[re, im]` parts.
pub(crate) type Node = ([f64; 2], [f64; 2]);

#[rustfmt::skip]
pub(crate) const CF_2: [Node; 1] = [
    ([0.58505156065513112550, 1.1858472517236771111], [0.16915263361154162260, -0.80980111154452168905]),
];

#[rustfmt::skip]
pub(crate) const CF_4: [Node; 2] = [
    ([1.5484005705393915573, 1.1918258539276197444], [-0.061683522554959415992, -1.9050594559798491655]),
    ([-0.36783831439986262640, 3.6581332720632830102], [0.073392419234164162867, 0.45000491585378902724]),
];

#[rustfmt::skip]
pub(crate) const CF_6: [Node; 3] = [
    ([2.4006029389330076296, 1.1931293084022919276], [-0.57901300403016051386, -4.2868885645816026791]),
    ([1.1585525717193166856, 3.6147726008201191394], [0.66300687052761403306, 1.4514129199029145125]),
    ([-1.7819882759207992899, 6.1965124673475685946], [-0.083581617156249529658, -0.10642926074795048782]),
];

#[rustfmt::skip]
pub(crate) const CF_8: [Node; 4] = [
    ([3.2209452449505679226, 1.1936196054172877270], [-1.8317717104417041116, -9.5256081289446758304]),
    ([2.2922491477094991814, 3.6007714960749370781], [2.4362407326605786593, 3.7167556404587190808]),
    ([0.26949098724626504660, 6.0820325927101395734], [-0.63258805365596493183, -0.44392310265305020045]),
    ([-3.4085395015771537833, 8.7730345644446129683], [0.028129757158198693641, 0.011577384568384277727]),
];

#[rustfmt::skip]
pub(crate) const CF_10: [Node; 5] = [
    ([4.0277324676495484331, 1.1938560664708728792], [-4.8183819912849413190, -21.054597241476862523]),
    ([3.2837528833704182765, 3.5943867724050828910], [7.1171651048201297639, 8.8195331594692315366]),
    ([1.7154060159266980039, 6.0389349255761096298], [-2.5655849551724013628, -1.2163857065160157737]),
    ([-0.89440470141735407033, 8.5827568987730363176], [0.27258698034821123068, 0.014211727071503380048]),
    ([-5.1611912717649473837, 11.375156252224778952], [-0.0057849038597150486024, 0.00068585070757798220225]),
];

#[rustfmt::skip]
pub(crate) const CF_12: [Node; 6] = [
    ([4.8274934521644603424, 1.1939879912233991709], [-11.799379956043858988, -46.411635333699305931]),
    ([4.2061242043218711234, 3.5909207588856018921], [18.785977421580649939, 20.237285126154954301]),
    ([2.9178685450832536430, 6.0173459240941552507], [-8.2382559342645270391, -2.7961912623274138987]),
    ([0.85170709672010865048, 8.5038328256375029133], [1.3194115340778381147, -0.18352358287099216159]),
    ([-2.2359682461249558506, 11.109296232707466546], [-0.068571494250310321976, 0.038419082886593774734]),
    ([-6.9986879085958929713, 13.995916624979262475], [0.00081843349927320751247, -0.00058135358242452034272]),
];

#[rustfmt::skip]
pub(crate) const CF_14: [Node; 7] = [
    ([5.6231425727460644484, 1.1940690463439735452], [-27.875161940147697728, -102.14733999057413024]),
    ([5.0893450605807155124, 3.5888240290270268122], [46.933274488835037140, 45.643649768832897080]),
    ([3.9933697105786673985, 6.0048316422350732686], [-23.498232091084934164, -5.8083591297155006594]),
    ([2.2697838292312247557, 8.4617379730402770068], [4.8071120988331201198, -1.3209793837427963652]),
    ([-0.20875863824999714447, 10.991260561901344210], [-0.37636003878234425763, 0.33518347029451865448]),
    ([-3.7032750494232811990, 13.656371871483397251], [0.0094390253107396977322, -0.017184791958484804031]),
    ([-8.8977731864686623949, 16.630982619902316406], [-0.000071542880635936426078, 0.00014361043349543090384]),
];

#[rustfmt::skip]
pub(crate) const CF_16: [Node; 8] = [
    ([6.4161776990994364053, 1.1941223933701388074], [-64.500878025539770288, -224.59440762652149193]),
    ([5.9481522689511797812, 3.5874573620183227381], [113.39775178483954177, 101.94721704215884721]),
    ([4.9931747377179988847, 5.9968817136039429327], [-62.518392463208072045, -11.190391094283295482]),
    ([3.5091036084149208100, 8.4361989858843762088], [15.059585270023514586, -5.7514052776421838959]),
    ([1.4193758971856691435, 10.925363484496724189], [-1.4793007113558071446, 1.7686588323782973465]),
    ([-1.4139284624888824321, 13.497725698892747697], [0.041023136835410495307, -0.15743466173455519164]),
    ([-5.2649713434426421246, 16.220221473167930794], [0.00021151742182464766889, 0.0043892969647380887956]),
    ([-10.843917078696981553, 19.277446167181658405], [-0.00000050901521865211971045, -0.000024220017652852447068]),
];

#[rustfmt::skip]
pub(crate) const CF_18: [Node; 9] = [
    ([7.2074477692175039451, 1.1941593642194171977], [-147.30534701667963409, -493.49607053536259840]),
    ([6.7906766853273045891, 3.5865163349653458642], [268.03706128396591177, 226.36122404245320890]),
    ([5.9438661140047767148, 5.9914988212047946367], [-159.05342288044594569, -20.056917236521876802]),
    ([4.6381519860313308842, 8.4193942537855475079], [43.058040835832219181, -20.281545516550555269]),
    ([2.8233463260741770214, 10.883998027206956782], [-4.8312929707519174664, 7.2512668730189119029]),
    ([0.41562310374571467510, 13.405983959861842077], [0.080471289382506150102, -0.90175882687043258405]),
    ([-2.7306872304075146299, 16.020446386762454762], [0.014992553670195932640, 0.043993277109943145037]),
    ([-6.9005256273528160946, 18.798070435680466850], [-0.00050476383984253604674, -0.00075273675591987000793]),
    ([-12.827374220122024351, 21.933247570118211198], [0.0000016688665300102285849, 0.0000030744171881615697819]),
];

#[rustfmt::skip]
pub(crate) const CF_20: [Node; 10] = [
    ([7.9974699449290221677, 1.1941860370880986980], [-333.45294170062219804, -1083.8437934076777602]),
    ([7.6217854063471778907, 3.5858404988219187544], [623.98566054584209631, 500.71100169537865637]),
    ([6.8607477719746741042, 5.9876774568743673331], [-392.44278167430998592, -32.841861320669383762]),
    ([5.6936649518724084749, 8.4076909689101636174], [115.94537646601935102, -63.477015176468203125]),
    ([4.0856214384637955936, 10.856038731988827151], [-14.046322945565360909, 25.553195371071812165]),
    ([1.9810938726660426178, 13.346833920307648662], [-0.13367857087062519971, -3.9952390998744034626]),
    ([-0.70901127518363347949, 15.901615793760903168], [0.15400704432919186988, 0.27171142114251856315]),
    ([-4.1365246158494972736, 18.557207110062584699], [-0.0094765714956583152655, -0.0074379081653271652531]),
    ([-8.5956885398717578225, 21.387810862074896669], [0.00015780791215145668306, 0.000075301691189771456512]),
    ([-14.841258928988522217, 24.596867425793814815], [-0.00000040123896189825542201, -0.00000027642491524831135262]),
];

#[rustfmt::skip]
pub(crate) const CF_22: [Node; 11] = [
    ([8.7865772918993536389, 1.1942059104691066417], [-750.13543794233231337, -2379.5921753715735907]),
    ([8.4445752024168744651, 3.5853386110888535760], [1436.7303283839786004, 1104.7895893630251201]),
    ([7.7533044462480020637, 5.9848632907370557018], [-947.28035250362865000, -46.244431922177406403]),
    ([6.6973982336050096273, 8.3991882804255597499], [299.48512215496533193, -183.99054469517460898]),
    ([5.2514788825440821089, 10.836136000271721786], [-37.736415268023589225, 81.484888058560042512]),
    ([3.3765419127236006020, 13.305989038688772268], [-1.9554171662753473350, -15.070988449823435920]),
    ([1.0131934270059641425, 15.823316262208161499], [0.97644338914480373368, 1.2758709678942221961]),
    ([-1.9317756987521211887, 18.410564576187290390], [-0.087110083685976819740, -0.042663887460276250249]),
    ([-5.6153705067362294340, 21.106225275077128177], [0.0028707948390575142734, 0.00027489706957540066052]),
    ([-10.340127278581115264, 23.987800675793227415], [-0.000031824220971785051318, 0.0000026296833037403180284]),
    ([-16.880507800757486519, 27.267148537786858970], [0.000000065239055014585675237, 0.0000000090879590322321382858]),
];

#[rustfmt::skip]
pub(crate) const CF_24: [Node; 12] = [
    ([9.5749940141288472333, 1.1942211138747981364], [-1679.7978871029366922, -5223.0930188510913794]),
    ([9.2611125206745143219, 3.5849556140106587157], [3280.9945748106673064, 2433.4400207402828553]),
    ([8.6277482272277571905, 5.9827291297673146587], [-2249.5960352427184550, -44.086811364659099996]),
    ([7.6631622422713936241, 8.3928040341251869357], [750.60508747809823617, -505.67420911914538404]),
    ([6.3482761584388820284, 10.821409258073559048], [-95.786119674558721553, 242.22878966425196647]),
    ([4.6544845568040001650, 13.276394906313026720], [-10.673294252957001182, -50.974183955915741778]),
    ([2.5397989228540143752, 15.768288189616118862], [4.7797228073527265063, 5.0260360678559279794]),
    ([-0.058175189628678344450, 18.312170793340011115], [-0.55282138126870994604, -0.17188536884298121980]),
    ([-3.2360391665715072016, 20.931395517717023705], [0.027344708853239708257, -0.0038095901358672657331]),
    ([-7.1553111536645760006, 23.666048401794538271], [-0.00057672804293095276482, 0.00029123468116933874906]),
    ([-12.126087338715347178, 26.596733319478648235], [0.0000045857489872756244217, -0.0000031604307162745624257]),
    ([-18.941277742955307175, 29.943186571817013682], [-0.0000000082379852034392685138, 0.0000000027451054704284764513]),
];

#[rustfmt::skip]
pub(crate) const CF_26: [Node; 13] = [
    ([10.362876576279565109, 1.1942330038670743348], [-3748.6317596232105636, -11462.194158623642101]),
    ([10.072830087188759629, 3.5846566607739617662], [7445.5434374852036425, 5353.4171328075122497]),
    ([9.4883272775772803302, 5.9810712377235514797], [-5276.2556167312817538, 27.824465802865447908]),
    ([8.6001905366083187725, 8.3878818212165333738], [1839.3362180369492657, -1336.9587434661339989]),
    ([7.3936859234201828817, 10.810178239973515309], [-232.97188030114339275, 683.90809081263236785]),
    ([5.8471301211750511252, 13.254167251941171261], [-44.245361266455291786, -159.45113397465254958]),
    ([3.9295413636734376818, 15.727827613232938179], [19.835051560685346292, 17.537481021557630411]),
    ([1.5966217591888743863, 18.241988653891127209], [-2.7859493127605169852, -0.51250235944228687274]),
    ([-1.2164681642644680389, 20.812264283196736171], [0.18124861424463186249, -0.058023775339527580541]),
    ([-4.6092368967269695922, 23.462892323493185796], [-0.0054591910663792521194, 0.0048472822338254305168]),
    ([-8.7472449893978823386, 26.235478009910640809], [0.000071136396687458783421, -0.00011687847146844409235]),
    ([-13.947586019392439934, 29.213550334742383966], [-0.00000040836011143457807117, 0.00000083994556665614698045]),
    ([-21.020575921018441201, 32.624259624741683422], [0.00000000079843574800685692144, -0.00000000078583701624527912733]),
];

#[rustfmt::skip]
pub(crate) const CF_28: [Node; 14] = [
    ([11.150337492659001262, 1.1942424778762547780], [-8343.0743393156168295, -25150.157356725447996]),
    ([10.880753038984971935, 3.5844188126978108941], [16812.746266709584333, 11766.799925149481678]),
    ([10.338049600295163680, 5.9797571542880981726], [-12255.244168184633037, 327.41462848804114717]),
    ([9.5149116626542012197, 8.3840031877350162246], [4429.9244729401736658, -3432.8613613872745001]),
    ([8.3997071103213564747, 10.801402132575719286], [-548.03787685739152862, 1856.8917427790351207]),
    ([6.9755627752035900753, 13.236996484336075454], [-158.60905223187780768, -470.58412500552254033]),
    ([5.2188580711683321524, 15.697055158720560206], [73.373927207830431150, 56.032135332984694146]),
    ([3.0967683575516347743, 18.189738480286866543], [-11.995647938944157060, -1.0284354670585967736]),
    ([0.56312516324756252462, 20.726204353482347860], [0.95118791291503631571, -0.45092738883144413260]),
    ([-2.4489802556786549008, 23.322599815120510067], [-0.035241931339009187729, 0.045870085598687301965]),
    ([-6.0416203472522824387, 26.004018868088111357], [0.00047160512456212383308, -0.0017499934392712148791]),
    ([-10.384046526839636428, 28.813513500902978962], [0.000000092795832151866399209, 0.000027605758574401379735]),
    ([-15.799901349042692169, 31.837380922732205935], [-0.0000000085739970782168723011, -0.00000015115409408861040400]),
    ([-23.116021457134842775, 35.309781050591457779], [-0.000000000047494624554912823908, 0.00000000013367045960115221010]),
];

#[rustfmt::skip]
pub(crate) const CF_30: [Node; 15] = [
    ([11.937459747989006626, 1.1942501488199766777], [-18529.384125130401210, -55177.237188978447931]),
    ([11.685634504271671631, 3.5842264641588466521], [37814.990723682254899, 25846.621051889607085]),
    ([11.179107132515229358, 5.9786976315094996766], [-28245.567255814746422, 1282.4723459621186433]),
    ([10.411949619833302512, 8.3808904404535756167], [10525.316023059807244, -8616.3911403381418422]),
    ([9.3748082259897259608, 10.794405147334383738], [-1254.8041990787887501, 4890.3799015185644998]),
    ([8.0542688393689807668, 13.223427816851918233], [-517.97478374946231581, -1328.1735948117555704]),
    ([6.4318504958271417768, 15.673023948644208562], [249.44982215809851522, 167.51275643335837144]),
    ([4.4824237653614292910, 18.149571587232911417], [-46.093902234188476132, -0.25849538197536222512]),
    ([2.1716745408141031195, 20.661440331535603105], [4.2421387974872451872, -2.5990741444603707207]),
    ([-0.54813594298099769253, 23.220126788308469083], [-0.17547090163101082958, 0.31504356737528408324]),
    ([-3.7457193059138050709, 25.842302780461918697], [0.00090115776472105293010, -0.016405460328213436153]),
    ([-7.5254584362844069864, 28.553886940956003890], [0.00013082082323431619495, 0.00040537724032963097139]),
    ([-12.060022600661068677, 31.399310464248028421], [-0.0000027796846518723565879, -0.0000045592044078402938899]),
    ([-17.679234670948155321, 34.467499042281904731], [0.000000012668866175353253189, 0.000000020177769448276016203]),
    ([-25.225685995452151465, 37.999266818770165029], [-0.0000000000018885981605926986909, -0.000000000017569581313457010786]),
];

#[rustfmt::skip]
pub(crate) const CF_32: [Node; 16] = [
    ([12.724305889350064386, 1.1942564468718732538], [-41082.552092262838203, -121041.84189293086456]),
    ([12.488040353523484275, 3.5840686963643348193], [84780.388978633824710, 56746.423358476666085]),
    ([12.013136182157908120, 5.9778307037247498682], [-64691.845961364519363, 4000.7597209325476503]),
    ([11.294721125306133704, 8.3783530715618750510], [24737.848613572283542, -21240.178912413541269]),
    ([10.325155179926221551, 10.788731494192100223], [-2808.6160418470539637, 12570.876184192139137]),
    ([9.0935823282964843465, 13.212502598776256675], [-1583.8918383927925381, -3619.3272427254496507]),
    ([7.5852350044128522406, 15.653852099914842358], [795.17257844833170701, 475.62320538906301951]),
    ([5.7803729913714401638, 18.117909535870120215], [-162.56402783797883572, 10.095637344115553464]),
    ([3.6526468887601838702, 20.611188621254506115], [16.788967395880430682, -12.455411972611065041]),
    ([1.1664980998773304447, 23.142282004086368584], [-0.71910749310960192492, 1.7497273808504919628]),
    ([-1.7271681308280514917, 25.723026245655817437], [-0.012256334498294738426, -0.11442577135651445193]),
    ([-5.0986698905039744135, 28.370605077996918097], [0.0022602497003525347648, 0.0037731113845283831543]),
    ([-9.0545062839826603254, 31.111730040877089829], [-0.000073644625867357692448, -0.000060667261914252036948]),
    ([-13.770545509620313038, 33.992149334288281348], [0.00000088058086134428164909, 0.00000046374002540398540724]),
    ([-19.582480153326712688, 37.103292244944513080], [-0.0000000031860741249536011165, -0.0000000017860774445627277376]),
    ([-27.347983561012490289, 40.692312296717550610], [0.0000000000011384168902212727166, 0.0000000000018468145810894794688]),
];

pub(crate) fn table(order: usize) -> Option<&'static [Node]> {
    match order {
        2 => Some(&CF_2),
        4 => Some(&CF_4),
        6 => Some(&CF_6),
        8 => Some(&CF_8),
        10 => Some(&CF_10),
        12 => Some(&CF_12),
        14 => Some(&CF_14),
        16 => Some(&CF_16),
        18 => Some(&CF_18),
        20 => Some(&CF_20),
        22 => Some(&CF_22),
        24 => Some(&CF_24),
        26 => Some(&CF_26),
        28 => Some(&CF_28),
        30 => Some(&CF_30),
        32 => Some(&CF_32),
        _ => None,
    }
}
